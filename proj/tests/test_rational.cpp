#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "noncong/rational.hpp"
#include "noncong/smith.hpp"

using namespace noncong;

TEST(Rational, SerializesAsNumOverDen) {
  EXPECT_EQ(to_string(make_rational(-28, 5)), "-28/5");
  EXPECT_EQ(to_string(make_rational(6, 3)), "2/1");
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_THROW(make_rational(1, 0), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, ValuationOfZeroIsInfinite) {
  EXPECT_FALSE(valuation(Integer(0), 5).has_value());
  EXPECT_EQ(valuation_or(Rational(0), 5, -1), -1);
  EXPECT_EQ(*valuation(make_rational(50, 3), 5), 2);
  EXPECT_EQ(*valuation(make_rational(3, 125), 5), -3);
}

TEST(Rational, ValuationIsAdditiveAndUltrametric) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-5000, 5000);
  for (int trial = 0; trial < 500; ++trial) {
    const long a = dist(rng), b = dist(rng), c = dist(rng) | 1, d = dist(rng) | 1;
    if (a == 0 || b == 0) continue;
    const Rational x = make_rational(a, c), y = make_rational(b, d);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      EXPECT_EQ(*valuation(Rational(x * y), p), *valuation(x, p) + *valuation(y, p));
      const Rational s = x + y;
      if (s != 0) {
        EXPECT_GE(*valuation(s, p), std::min(*valuation(x, p), *valuation(y, p)));
      }
    }
  }
}

TEST(Rational, ValuationMatchesRepeatedDivision) {
  for (long x = 1; x < 3000; ++x)
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      long v = 0, y = x;
      while (y % static_cast<long>(p) == 0) {
        y /= static_cast<long>(p);
        ++v;
      }
      ASSERT_EQ(*valuation(Integer(x), p), v);
    }
}

TEST(Rational, ModIsNonNegative) {
  EXPECT_EQ(mod(Integer(-7), Integer(5)), 3);
  EXPECT_EQ(mod(Integer(12), Integer(5)), 2);
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
}

TEST(Rational, PrimeTest) {
  std::vector<int> primes;
  for (int i = 0; i < 60; ++i)
    if (is_prime(static_cast<std::uint64_t>(i))) primes.push_back(i);
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
}

// d1 = gcd of entries, d1 d2 = gcd of 2x2 minors
TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix m(2, std::vector<std::int64_t>(3));
    for (auto& row : m)
      for (auto& x : row) x = dist(rng);
    std::int64_t g1 = 0, g2 = 0;
    for (auto& row : m)
      for (auto x : row) g1 = std::gcd(g1, x);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g2 = std::gcd(g2, m[0][i] * m[1][j] - m[0][j] * m[1][i]);
    const auto d = smith_diagonal(m);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], g1);
    EXPECT_EQ(d[0] * d[1], g2);
    if (d[1] != 0) {
      EXPECT_EQ(d[1] % d[0], 0);
    }
  }
}
