#include <gtest/gtest.h>

#include "nmz/laurent.hpp"

using namespace nmz;

TEST(Laurent, PowersAndProducts) {
  EXPECT_EQ(Laurent::L(2) * Laurent::L(-2), Laurent(1));
  auto a = Laurent::L_minus_one(2);
  EXPECT_EQ(a, Laurent::L(2) - Laurent::L(1) * Laurent(2) + Laurent(1));
  EXPECT_EQ(a.str(), "L^2 - 2*L + 1");
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Laurent, EvaluateAtPrime) {
  EXPECT_EQ(Laurent::L(-3).evaluate(2), Rat(1, 8));
  EXPECT_EQ(Laurent::L_minus_one(3).evaluate(5), Rat(64));
  EXPECT_EQ((Laurent::L(1) + Laurent::L(-1)).evaluate(3), Rat(10, 3));
}

TEST(Laurent, ZeroHasNoTerms) {
  Laurent z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(Laurent(0).is_zero());
  EXPECT_EQ(z.str(), "0");
}
