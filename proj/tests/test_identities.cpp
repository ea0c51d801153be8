#include <gtest/gtest.h>

#include "bridgekit/census.hpp"

using namespace bridgekit;

TEST(Identities, AllPassToTwoHundred) {
  const auto results = verify_identities(200);
  EXPECT_EQ(results.size(), 7u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample.value_or("");
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

TEST(Identities, HandValues) {
  // n=3: sum_q 2^q C(5-q, q) = 1 + 2*4 + 4*3 = 21 = (64-1)/3.
  BigInt s = 0;
  for (int qq = 0; qq <= 2; ++qq) s += BigInt(1 << qq) * binomial(5 - qq, qq);
  EXPECT_EQ(s, 21);
  // n=1: a single term equal to 1 = (4-1)/3.
  EXPECT_EQ(binomial(1, 0), 1);
}

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}
