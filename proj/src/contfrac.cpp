#include "bridgekit/contfrac.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "bridgekit/error.hpp"

namespace bridgekit {

IntWord::IntWord(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidWord("continued fraction must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) throw InvalidWord("zero entry at index " + std::to_string(i));
  }
}

bool EvenWord::is_valid(std::span<const Entry> entries) {
  if (entries.size() < 2 || entries.size() % 2 != 0) return false;
  return std::all_of(entries.begin(), entries.end(), [](Entry e) { return e != 0 && e % 2 == 0; });
}

EvenWord::EvenWord(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2 || entries_.size() % 2 != 0) {
    throw InvalidWord("even word must have even length >= 2, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0 || entries_[i] % 2 != 0) {
      throw InvalidWord("entry " + std::to_string(entries_[i]) + " at index " + std::to_string(i) +
                        " is not a nonzero even integer");
    }
  }
}

EvenWord make_even_word_unchecked(std::vector<Entry> entries) {
  return EvenWord(EvenWord::Unchecked{}, std::move(entries));
}

Rational eval(const IntWord& word) {
  auto e = word.entries();
  // Innermost first: x = 1/a_m, then x = 1/(a_i + x).
  Rational x = Rational(e.back()).reciprocal();
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    Rational denom = Rational(e[i]) + x;
    if (denom.is_zero()) {
      throw ZeroDivision("tail starting at index " + std::to_string(i) + " evaluates to zero");
    }
    x = denom.reciprocal();
  }
  return x;
}

int sign_changes(std::span<const Entry> entries) {
  int t = 0;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if ((entries[i] < 0) != (entries[i + 1] < 0)) ++t;
  }
  return t;
}

Entry abs_sum(std::span<const Entry> entries) {
  Entry s = 0;
  for (Entry e : entries) s += e < 0 ? -e : e;
  return s;
}

namespace {

// Even integer nearest to num/den (den > 0). Ties go to the larger |value|.
BigInt nearest_even(const BigInt& num, const BigInt& den) {
  // floor(num / (2 den)) and its successor bracket num/den between 2f and 2f+2.
  BigInt twice = 2 * den;
  BigInt f = num / twice;
  if (num % twice != 0 && num < 0) --f;
  BigInt lo = 2 * f;
  BigInt hi = lo + 2;
  // Compare |num/den - lo| vs |hi - num/den| via numerators over den.
  BigInt dlo = num - lo * den;
  BigInt dhi = hi * den - num;
  if (dlo < dhi) return lo;
  if (dhi < dlo) return hi;
  return boost::multiprecision::abs(lo) > boost::multiprecision::abs(hi) ? lo : hi;
}

}  // namespace

EvenWord to_reduced_even(const Rational& r) {
  if (r.is_zero() || r.abs() >= Rational(1)) {
    throw NotAKnotFraction("value " + r.to_string() + " is outside 0 < |r| < 1");
  }
  if (r.denominator() % 2 == 0) {
    throw NotAKnotFraction("value " + r.to_string() + " has even denominator (a two-component link)");
  }
  if (r.numerator() % 2 != 0) {
    // Even-length even expansions always evaluate to even/odd fractions.
    throw NotAKnotFraction("value " + r.to_string() +
                           " has odd numerator; no even expansion evaluates to it exactly");
  }
  std::vector<Entry> out;
  // Invariant: current value is u/v with v > 0, 0 < |u/v| < 1. The numerator
  // |u| strictly decreases each step, so the loop terminates.
  BigInt u = r.numerator();
  BigInt v = r.denominator();
  while (u != 0) {
    // 1/(u/v) = v/u; normalize to a positive denominator.
    BigInt num = u > 0 ? v : BigInt(-v);
    BigInt den = boost::multiprecision::abs(u);
    BigInt a = nearest_even(num, den);
    if (a > std::numeric_limits<Entry>::max() || a < std::numeric_limits<Entry>::min()) {
      throw NotAKnotFraction("partial quotient of " + r.to_string() + " exceeds 64 bits");
    }
    out.push_back(static_cast<Entry>(a));
    // Remainder num/den - a = (num - a*den)/den.
    u = num - a * den;
    v = den;
  }
  EvenWord w(std::move(out));
  if (eval(w) != r) throw Error("internal: even expansion of " + r.to_string() + " failed round trip");
  return w;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

IntWord parse_int_word(std::string_view text) {
  std::vector<Entry> out;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("empty word", std::string(text), 0);
  }
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t b = pos, e = end;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    std::string_view tok = text.substr(b, e - b);
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Entry value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (tok.empty() || digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
        (digits.front() == '-' && tok.front() == '+')) {
      throw ParseError("invalid token '" + std::string(tok) + "' at position " + std::to_string(b),
                       std::string(tok), b);
    }
    if (value == 0) {
      throw ParseError("zero entry '" + std::string(tok) + "' at position " + std::to_string(b),
                       std::string(tok), b);
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntWord(std::move(out));
}

EvenWord parse_even_word(std::string_view text) {
  IntWord w = parse_int_word(text);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] % 2 != 0) {
      // Locate the token for the error message.
      std::size_t pos = 0;
      for (std::size_t k = 0; k < i; ++k) pos = text.find(',', pos) + 1;
      throw ParseError("odd entry " + std::to_string(w[i]) + " at position " + std::to_string(pos),
                       std::to_string(w[i]), pos);
    }
  }
  if (w.size() % 2 != 0) {
    throw ParseError("even word needs an even number of entries, got " + std::to_string(w.size()),
                     std::string(text), text.size());
  }
  return EvenWord(w.vec());
}

std::string format_word(std::span<const Entry> entries) {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s;
}

}  // namespace bridgekit
