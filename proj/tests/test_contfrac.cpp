#include <gtest/gtest.h>

#include <random>

#include "bridgekit/census.hpp"
#include "bridgekit/contfrac.hpp"
#include "bridgekit/error.hpp"
#include "oracles.hpp"

using namespace bridgekit;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }
EvenWord ew(std::vector<Entry> v) { return EvenWord(std::move(v)); }

}  // namespace

TEST(Eval, HandExamples) {
  EXPECT_EQ(eval(IntWord({2})), q(1, 2));
  EXPECT_EQ(eval(IntWord({2, -2})), q(2, 3));
  EXPECT_EQ(eval(IntWord({2, 2})), q(2, 5));
}

TEST(Eval, ZeroTailThrows) { EXPECT_THROW(eval(IntWord({3, 1, -1})), ZeroDivision); }

TEST(Eval, MatchesConvergentRecurrenceOnRandomWords) {
  std::mt19937_64 rng(20240611);
  int checked = 0, singular = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto w = oracle::random_int_word(rng, 12, 9);
    Rational mine;
    try {
      mine = eval(IntWord(w));
    } catch (const ZeroDivision&) {
      ++singular;
      continue;
    }
    EXPECT_EQ(mine, oracle::eval_convergents(w)) << format_word(std::span<const Entry>(w));
    ++checked;
  }
  EXPECT_GT(checked, 900);
  EXPECT_LT(singular, 100);
}

TEST(SignChanges, Examples) {
  EXPECT_EQ(sign_changes(ew({2, -2, 2, -2})), 3);
  EXPECT_EQ(sign_changes(ew({2, 2})), 0);
  EXPECT_EQ(sign_changes(ew({2, -4, 4, -2})), 3);
}

TEST(Symmetries, Examples) {
  EXPECT_EQ(rev_neg(ew({2, -2, 4, -2, 2, -2, 2, -2})), ew({2, -2, 2, -2, 2, -4, 2, -2}));
  EXPECT_EQ(negate(ew({2, 2})), ew({-2, -2}));
  EXPECT_EQ(reverse(ew({2, -4, 4, -2})), ew({-2, 4, -4, 2}));
}

TEST(ToReducedEven, Examples) {
  EXPECT_EQ(to_reduced_even(q(2, 3)), ew({2, -2}));
  EXPECT_EQ(to_reduced_even(q(2, 5)), ew({2, 2}));
  EXPECT_THROW(to_reduced_even(q(1, 2)), NotAKnotFraction);
}

TEST(ToReducedEven, RejectsOutOfRangeAndOddNumerators) {
  EXPECT_THROW(to_reduced_even(Rational(0)), NotAKnotFraction);
  EXPECT_THROW(to_reduced_even(Rational(1)), NotAKnotFraction);
  EXPECT_THROW(to_reduced_even(q(5, 3)), NotAKnotFraction);
  // An odd numerator over an odd denominator has no even expansion of even length.
  EXPECT_THROW(to_reduced_even(q(1, 3)), NotAKnotFraction);
}

TEST(ToReducedEven, LongExpansion) {
  // 100/101 needs many steps; a bit-count step cap would reject it.
  const EvenWord w = to_reduced_even(q(100, 101));
  EXPECT_EQ(eval(w), q(100, 101));
  EXPECT_GT(w.size(), 14u);
}

TEST(Words, ConstructionChecks) {
  EXPECT_THROW(IntWord({}), InvalidWord);
  EXPECT_THROW(IntWord({1, 0}), InvalidWord);
  EXPECT_THROW(EvenWord({2}), InvalidWord);
  EXPECT_THROW(EvenWord({2, 3}), InvalidWord);
  EXPECT_TRUE(EvenWord::is_valid(std::vector<Entry>{2, -4}));
  EXPECT_FALSE(EvenWord::is_valid(std::vector<Entry>{2, 0}));
}

TEST(Parse, AcceptsWhitespaceAndSigns) {
  EXPECT_EQ(parse_even_word(" 2 , -4,4 ,  -2"), ew({2, -4, 4, -2}));
  EXPECT_EQ(parse_even_word("+2,-2"), ew({2, -2}));
  EXPECT_EQ(parse_int_word("3"), IntWord({3}));
  EXPECT_EQ(format_word(ew({2, -4, 4, -2})), "2,-4,4,-2");
}

TEST(Parse, ReportsOffendingToken) {
  try {
    parse_int_word("2,0,2");
    FAIL() << "zero entry accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "0");
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_int_word("2,x7,2");
    FAIL() << "junk accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "x7");
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_int_word(""), ParseError);
  EXPECT_THROW(parse_int_word("2,,2"), ParseError);
  EXPECT_THROW(parse_even_word("2,3"), ParseError);
  EXPECT_THROW(parse_even_word("2,-2,2"), ParseError);
}

TEST(Properties, RoundTripInvolutionsAndSignBoundsOnCensusWords) {
  std::size_t words = 0;
  for (int c = 3; c <= 16; ++c) {
    for_each_word(c, [&](std::span<const Entry> s) {
      const EvenWord w(std::vector<Entry>(s.begin(), s.end()));
      const Rational v = eval(w);
      ASSERT_EQ(eval(to_reduced_even(v)), v) << format_word(w);
      ASSERT_EQ(rev_neg(rev_neg(w)), w);
      ASSERT_EQ(negate(negate(w)), w);
      ASSERT_EQ(reverse(reverse(w)), w);
      const int t = sign_changes(w);
      ASSERT_EQ(sign_changes(negate(w)), t);
      ASSERT_EQ(sign_changes(reverse(w)), t);
      ASSERT_GE(t, 0);
      ASSERT_LE(t, static_cast<int>(w.size()) - 1);
      ++words;
    });
  }
  EXPECT_GT(words, 20000u);
}

TEST(Properties, ReducedEvenIsTheCensusWordForEveryKnotFraction) {
  // Each fraction has exactly one even expansion of even length, so the
  // greedy expansion must return the word we started from.
  for (int c = 3; c <= 12; ++c) {
    for_each_word(c, [&](std::span<const Entry> s) {
      const EvenWord w(std::vector<Entry>(s.begin(), s.end()));
      ASSERT_EQ(to_reduced_even(eval(w)), w);
    });
  }
}
