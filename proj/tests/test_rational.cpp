#include <gtest/gtest.h>

#include <random>
#include <string>

#include "polydc/rational.hpp"

using namespace polydc;

namespace {

bool is_canonical(const Rational& r) {
  if (r.denominator() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return g == 1 || (r.is_zero() && r.denominator() == 1);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, MakeRationalReducesToLowestTerms) {
  EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(make_rational(3, -6)), "-1/2");
  const Rational zero = make_rational(0, 7);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(to_string(zero), "0");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(pow(Rational(0), -1), DivisionByZero);
}

TEST(Rational, TextForm) {
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(to_string(make_rational(-3, 2)), "-3/2");
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("0/9"), Rational(0));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a/b", "1//2", " 1", "--1", "1/-2"}) {
    EXPECT_THROW(parse_rational(bad), UsageError) << bad;
  }
}

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
  EXPECT_EQ(floor(make_rational(7, 3)), 2);
  EXPECT_EQ(floor(make_rational(-1, 4)), -1);
  EXPECT_EQ(floor(Rational(-3)), -3);
  EXPECT_EQ(fractional_part(make_rational(-1, 4)), make_rational(3, 4));
  EXPECT_EQ(fractional_part(Rational(5)), Rational(0));
}

TEST(Rational, PowerWithSignedExponent) {
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(pow(Rational(3), -2), make_rational(1, 9));
  EXPECT_EQ(pow(make_rational(-2, 3), 3), make_rational(-8, 27));
  EXPECT_EQ(pow(make_rational(-2, 3), -1), make_rational(-3, 2));
  EXPECT_EQ(sign_power(-3), -1);
  EXPECT_EQ(sign_power(BigInt(-4)), 1);
}

TEST(Rational, ArithmeticStaysCanonical) {
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    EXPECT_TRUE(is_canonical(a + b));
    EXPECT_TRUE(is_canonical(a - b));
    EXPECT_TRUE(is_canonical(a * b));
    if (!b.is_zero()) {
      EXPECT_TRUE(is_canonical(a / b));
    }
    EXPECT_TRUE(is_canonical(-a));
    EXPECT_TRUE(is_canonical(a - a));
    EXPECT_EQ(a - a, Rational(0));
  }
}

TEST(Rational, TextRoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> digits(1, 40);
  std::uniform_int_distribution<int> digit(0, 9);
  auto big = [&](bool nonzero) {
    std::string s;
    const int n = digits(rng);
    for (int i = 0; i < n; ++i) s += static_cast<char>('0' + digit(rng));
    BigInt v(s, 10);
    if (nonzero && v == 0) v = 1;
    return v;
  };
  for (int i = 0; i < 1000; ++i) {
    BigInt num = big(false);
    if (i % 2) num = -num;
    const Rational r(num, big(true));
    const std::string text = to_string(r);
    const Rational back = parse_rational(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_string(back), text);
    EXPECT_TRUE(is_canonical(back));
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(make_rational(-1, 2), make_rational(1, 3));
  EXPECT_GT(make_rational(2, 3), make_rational(1, 2));
  EXPECT_EQ(make_rational(4, 6), make_rational(2, 3));
}
