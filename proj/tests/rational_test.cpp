#include <random>

#include <gtest/gtest.h>

#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

using namespace harbourne;

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(Rational(-450, 134)), "-225/67");
  EXPECT_EQ(to_string(Rational(12, 4)), "3");
  EXPECT_EQ(to_string(Rational(0, 7)), "0");
  EXPECT_EQ(to_string(make_rational(3, -6)), "-1/2");
  EXPECT_EQ(to_string(make_rational(-3, -6)), "1/2");
  EXPECT_THROW(make_rational(1, 0), PreconditionError);
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_integer("-42"), Integer(-42));
  EXPECT_EQ(parse_integer("+7"), Integer(7));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_integer("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1.5", "1e3", "3/0", "3/-4", "a", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
  EXPECT_THROW(parse_integer("2/3"), InputError);
}

TEST(Rational, RoundTripsThroughText) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rational q(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Rational, FieldAxiomsSpotChecks) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-500, 500), den(1, 97);
  for (int i = 0; i < 300; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const Rational q = a * b - c;
    EXPECT_EQ(gcd(numerator_of(q), denominator_of(q)), 1);
    EXPECT_GT(denominator_of(q), 0);
  }
}

TEST(Rational, Powers) {
  EXPECT_EQ(ipow(Integer(3), 4), Integer(81));
  EXPECT_EQ(ipow(Integer(2), 100), Integer(1) << 100);
  EXPECT_EQ(rational_pow(Integer(2), -3), Rational(1, 8));
  EXPECT_EQ(rational_pow(Integer(5), 0), Rational(1));
  EXPECT_EQ(rational_pow(Integer(-2), -3), Rational(-1, 8));
  EXPECT_EQ(choose2(Integer(45)), Integer(990));
}
