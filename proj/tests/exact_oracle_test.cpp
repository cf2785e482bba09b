#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "ks2/exact_oracle.hpp"
#include "oracles.hpp"

namespace ks2 {
namespace {

ExactP frac(long long a, long long b) { return ExactP(big_int(a), big_int(b)); }

TEST(ExactOracle, FrozenSmallValues) {
  EXPECT_EQ(p2_classical_exact({1, 1, 1}), frac(1, 1));
  EXPECT_EQ(p2_classical_exact({2, 2, 4}), frac(1, 3));
  EXPECT_EQ(brute_force_p2({1, 1, 1}), frac(1, 1));
  EXPECT_EQ(brute_force_p2({1, 1, 2}), frac(0, 1));
  EXPECT_EQ(brute_force_p2({3, 3, 9}), frac(1, 10));
  EXPECT_EQ(p2_classical_exact({4, 6, 8}), frac(97, 105));
  EXPECT_EQ(brute_force_p2({4, 6, 18}), frac(2, 21));
}

TEST(ExactOracle, LowestTerms) {
  const ExactP p = brute_force_p2({3, 3, 9});  // 2/20
  EXPECT_EQ(p.numerator(), 1);
  EXPECT_EQ(p.denominator(), 10);
  EXPECT_EQ(p.str(), "1/10");
}

TEST(ExactOracle, Guards) {
  EXPECT_THROW(brute_force_p2({12, 11, 3}), too_many_paths);
  EXPECT_NO_THROW(brute_force_p2({11, 11, 30}));
  EXPECT_THROW(p2_classical_exact({1500, 501, 3}), resource_limit);
  EXPECT_THROW(p2_classical_exact({10, 10, 3}, 19), resource_limit);
  EXPECT_NO_THROW(p2_classical_exact({10, 10, 3}, 20));
}

TEST(ExactOracle, Binomial) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(30, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), big_int("118264581564861424"));
}

TEST(ExactOracle, BruteForceMatchesClassicalExactly) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      ExactP last = frac(1, 1);
      for (std::int64_t c = 0; c <= m * n + 1; ++c) {
        const ExactP exact = p2_classical_exact({m, n, c});
        ASSERT_EQ(brute_force_p2({m, n, c}), exact) << m << " " << n << " " << c;
        EXPECT_LE(exact, last);
        EXPECT_LE(frac(0, 1), exact);
        last = exact;
      }
    }
  }
}

TEST(ExactOracle, InsideCountsMatchPathEnumeration) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t c = 1; c <= m * n; c += 2) {
        const auto a = inside_path_counts({m, n, c});
        for (std::int64_t i = 0; i <= m; ++i) {
          for (std::int64_t j = 0; j <= n; ++j) {
            const auto at = static_cast<std::size_t>(i * (n + 1) + j);
            EXPECT_EQ(a[at], testing::paths_avoiding_outside(i, j, m, n, c))
                << m << " " << n << " " << c << " @ " << i << "," << j;
          }
        }
      }
    }
  }
}

TEST(ExactOracle, ToDoubleRounding) {
  EXPECT_EQ(to_double(frac(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(to_double(frac(1, 2)), 0.5);
  EXPECT_EQ(to_double(frac(0, 1)), 0.0);
  EXPECT_EQ(to_double(frac(1, 1)), 1.0);
  EXPECT_EQ(to_double(frac(2, 3)), 2.0 / 3.0);
  EXPECT_EQ(to_double(frac(-1, 10)), -0.1);
  // halfway between 1 and 1 + 2^-52 rounds to even (1)
  const big_int two52 = big_int(1) << 52;
  EXPECT_EQ(to_double(ExactP(two52 * 2 + 1, two52 * 2)), 1.0);
  EXPECT_EQ(to_double(ExactP(two52 * 2 + 3, two52 * 2)), 1.0 + 0x1.0p-51);
}

TEST(ExactOracle, ToDoubleSubnormalsAndUnderflow) {
  const big_int two1074 = big_int(1) << 1074;
  auto r = to_double_checked(ExactP(big_int(1), two1074));
  EXPECT_EQ(r.value, std::numeric_limits<double>::denorm_min());
  EXPECT_FALSE(r.underflow);
  r = to_double_checked(ExactP(big_int(3), two1074 * 2));  // 1.5 ulp -> 2 ulp
  EXPECT_EQ(r.value, 2 * std::numeric_limits<double>::denorm_min());
  r = to_double_checked(ExactP(big_int(1), two1074 * 4));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.underflow);
  r = to_double_checked(ExactP(big_int(1), two1074 * 2));  // tie to even zero
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.underflow);
}

// |p - r| <= |p - r'| for both neighbours r' of r, checked in exact rationals.
TEST(ExactOracle, ToDoubleIsNearestOnRandomRationals) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    big_int num = rng() >> (rng() % 60), den = rng() >> (rng() % 60);
    if (trial % 3 == 0) den <<= static_cast<unsigned>(rng() % 1100);
    if (den == 0) den = 1;
    const ExactP p(num, den);
    const double r = to_double(p);
    auto dist = [&](double v) -> big_rational {
      return boost::multiprecision::abs(p.value() - testing::exact_value(v));
    };
    const auto d0 = dist(r);
    EXPECT_LE(d0, dist(std::nextafter(r, 2.0)));
    if (r > 0) {
      EXPECT_LE(d0, dist(std::nextafter(r, -1.0)));
    }
  }
}

TEST(ExactOracle, LargeTailConvertsWithoutUnderflow) {
  // ~1e-300 at m = n = 500 with D very close to 1
  const ExactP p = p2_classical_exact({500, 500, 500 * 499});
  const auto r = to_double_checked(p);
  EXPECT_FALSE(r.underflow);
  EXPECT_GT(r.value, 1e-305);
  EXPECT_LT(r.value, 1e-290);
}

TEST(ExactOracle, ComplementSaturates) {
  const ExactP p = p2_classical_exact({500, 500, 125000});
  EXPECT_LT(frac(0, 1), p);
  EXPECT_GT(to_double(p), 0.0);
  EXPECT_EQ(to_double(p.complement()), 1.0);
}

}  // namespace
}  // namespace ks2
