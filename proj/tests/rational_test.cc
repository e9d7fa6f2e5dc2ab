//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/rational.h"

#include <stdexcept>

#include <gtest/gtest.h>

namespace commoncert {
namespace {

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("+2/3"), Rational(2, 3));
}

TEST(RationalTest, RejectsInexactOrMalformedText) {
  for (const char *bad : {"0.75", "1e-3", "", "/2", "1/", "1/-2", "1/0",
                          "a/b", "1/2/3", " 1/2"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(RationalTest, FormatsCanonically) {
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(Rational(-3)), "-3");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
}

TEST(RationalTest, Powers) {
  EXPECT_EQ(pow(Rational(3, 4), 4), Rational(81, 256));
  EXPECT_EQ(pow(Rational(-1, 2), 3), Rational(-1, 8));
  EXPECT_EQ(pow(Rational(7, 9), 0), Rational(1));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(pow2(10), Rational(1024));
  EXPECT_EQ(pow2(-8), Rational(1, 256));
  EXPECT_EQ(pow2(0), Rational(1));
}

TEST(RationalTest, PowMatchesRepeatedMultiplication) {
  const Rational base(-6, 35);
  Rational product = 1;
  for (unsigned e = 0; e < 40; ++e) {
    EXPECT_EQ(pow(base, e), product);
    product *= base;
  }
}

} // namespace
} // namespace commoncert
