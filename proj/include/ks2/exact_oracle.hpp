#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ks2/corridor.hpp"
#include "ks2/error.hpp"

namespace ks2 {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

// Exact probability as a rational in lowest terms.
class ExactP {
 public:
  ExactP() = default;
  explicit ExactP(big_rational value) : value_(std::move(value)) {}
  ExactP(big_int numerator, big_int denominator)
      : value_(std::move(numerator), std::move(denominator)) {}

  big_int numerator() const { return boost::multiprecision::numerator(value_); }
  big_int denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  const big_rational& value() const noexcept { return value_; }

  ExactP complement() const { return ExactP(big_rational(1) - value_); }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const { return value_.str(); }

  friend bool operator==(const ExactP& a, const ExactP& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactP& a, const ExactP& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExactP& a, const ExactP& b) {
    return a.value_ <= b.value_;
  }

 private:
  big_rational value_{0};
};

inline big_int binomial(std::int64_t total, std::int64_t k) {
  if (k < 0 || k > total) return 0;
  k = std::min(k, total - k);
  big_int b = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    b *= total - k + t;
    b /= t;  // exact: b is now binom(total - k + t, t)
  }
  return b;
}

struct DoubleConversion {
  double value = 0.0;
  // Nonzero rational that rounded to zero.
  bool underflow = false;
};

// Correctly rounded (nearest, ties to even) conversion including subnormals.
inline DoubleConversion to_double_checked(const ExactP& p) {
  using boost::multiprecision::msb;
  big_int num = p.numerator();
  const big_int den = p.denominator();
  if (num == 0) return {0.0, false};
  const bool negative = num < 0;
  if (negative) num = -num;

  // Pick a scale 2^s that leaves 53 significant bits in floor(num * 2^s / den),
  // but never resolve below 2^-1074.
  const long long nb = static_cast<long long>(msb(num));
  const long long db = static_cast<long long>(msb(den));
  long long s = 52 - (nb - db);
  auto scaled_quotient = [&](long long shift, big_int& rem) {
    big_int q;
    if (shift >= 0) {
      divide_qr(big_int(num << static_cast<unsigned>(shift)), den, q, rem);
    } else {
      divide_qr(num, big_int(den << static_cast<unsigned>(-shift)), q, rem);
    }
    return q;
  };
  big_int rem;
  big_int q = scaled_quotient(s, rem);
  if (q < (big_int(1) << 52)) {
    ++s;
    q = scaled_quotient(s, rem);
  }
  if (s > 1074) {
    s = 1074;
    q = scaled_quotient(s, rem);
  }

  const big_int divisor = s >= 0 ? den : big_int(den << static_cast<unsigned>(-s));
  const big_int twice = rem * 2;
  if (twice > divisor || (twice == divisor && (q & 1) != 0)) ++q;

  const double mantissa = q.convert_to<double>();  // q <= 2^53, exact
  double value = std::ldexp(mantissa, static_cast<int>(-s));
  if (negative) value = -value;
  return {value, value == 0.0};
}

inline double to_double(const ExactP& p) { return to_double_checked(p).value; }

inline constexpr std::int64_t default_exact_size_limit = 2000;

// Hodges' inside count A(i, j): corridor-respecting paths from the origin,
//
//   A = 0                        outside,
//   A = 1                        inside with i == 0 or j == 0,
//   A = A(i-1, j) + A(i, j-1)    otherwise,
//
// in exact integers over the same row bounds as the stable sweep. Returns
// P2 = 1 - A(m, n) / binom(m + n, m). Throws resource_limit when m + n
// exceeds size_limit.
inline ExactP p2_classical_exact(const CorridorSpec& spec,
                                 std::int64_t size_limit = default_exact_size_limit) {
  require_valid(spec);
  if (spec.m + spec.n > size_limit) {
    throw resource_limit("exact evaluation needs m + n <= " +
                         std::to_string(size_limit) + ", got " +
                         std::to_string(spec.m + spec.n));
  }
  if (spec.all_outside()) return ExactP(1, 1);
  if (spec.none_outside()) return ExactP(0, 1);

  std::vector<big_int> prev, row;
  RowBounds prev_bounds{0, -1};
  for (std::int64_t i = 0; i <= spec.m; ++i) {
    const RowBounds bounds = row_bounds(i, spec);
    if (bounds.empty()) return ExactP(1, 1);
    std::swap(prev, row);
    row.resize(static_cast<std::size_t>(bounds.j_max - bounds.j_min + 1));
    for (std::int64_t j = bounds.j_min; j <= bounds.j_max; ++j) {
      big_int& cell = row[static_cast<std::size_t>(j - bounds.j_min)];
      if (i == 0 || j == 0) {
        cell = 1;
        continue;
      }
      if (j >= prev_bounds.j_min && j <= prev_bounds.j_max) {
        cell = prev[static_cast<std::size_t>(j - prev_bounds.j_min)];
      } else {
        cell = 0;
      }
      if (j > bounds.j_min) cell += row[static_cast<std::size_t>(j - 1 - bounds.j_min)];
    }
    prev_bounds = bounds;
  }
  const big_int inside = row.back();  // j_max of the last row is n
  const big_int total = binomial(spec.m + spec.n, spec.m);
  return ExactP(total - inside, total);
}

// Full (m+1) x (n+1) table of A(i, j), row-major. Small grids only.
inline std::vector<big_int> inside_path_counts(const CorridorSpec& spec) {
  require_valid(spec);
  if ((spec.m + 1) * (spec.n + 1) > 1'000'000) {
    throw table_too_large("path count table too large");
  }
  const auto cols = static_cast<std::size_t>(spec.n + 1);
  std::vector<big_int> a(static_cast<std::size_t>(spec.m + 1) * cols);
  for (std::int64_t i = 0; i <= spec.m; ++i) {
    for (std::int64_t j = 0; j <= spec.n; ++j) {
      const auto at = static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j);
      if (corridor_outside(i, j, spec)) {
        a[at] = 0;
      } else if (i == 0 || j == 0) {
        a[at] = 1;
      } else {
        a[at] = a[at - cols] + a[at - 1];
      }
    }
  }
  return a;
}

inline constexpr std::int64_t brute_force_size_limit = 22;

// Enumerates all binom(m + n, m) lattice paths and counts those touching an
// outside point. Each path is a bit mask over m + n steps; bit set = x-step.
inline ExactP brute_force_p2(const CorridorSpec& spec) {
  require_valid(spec);
  if (spec.m + spec.n > brute_force_size_limit) {
    throw too_many_paths("path enumeration needs m + n <= " +
                         std::to_string(brute_force_size_limit));
  }
  const int steps = static_cast<int>(spec.m + spec.n);
  const std::uint32_t last = ((std::uint32_t{1} << spec.m) - 1) << spec.n;
  std::uint32_t mask = (std::uint32_t{1} << spec.m) - 1;
  std::uint64_t hits = 0, paths = 0;
  while (true) {
    ++paths;
    std::int64_t i = 0, j = 0;
    bool exits = corridor_outside(0, 0, spec);
    for (int step = 0; step < steps && !exits; ++step) {
      if ((mask >> step) & 1u) {
        ++i;
      } else {
        ++j;
      }
      exits = corridor_outside(i, j, spec);
    }
    if (exits) ++hits;
    if (mask == last) break;
    // next mask with the same popcount (Gosper)
    const std::uint32_t lowest = mask & (~mask + 1);
    const std::uint32_t ripple = mask + lowest;
    mask = ripple | (((ripple ^ mask) >> 2) / lowest);
  }
  return ExactP(big_int(hits), big_int(paths));
}

}  // namespace ks2
