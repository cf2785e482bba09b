#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "ks2/statistic.hpp"

namespace ks2 {

// Grid (i, j), 0 <= i <= m, 0 <= j <= n, lies outside the corridor iff
// |i*n - j*m| >= c. Equivalent to |i/m - j/n| >= c/(m*n) without rounding.
struct CorridorSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t c = 1;

  static CorridorSpec from(const KsStatistic& s) { return {s.m, s.n, s.c}; }

  std::int64_t mn() const noexcept { return m * n; }

  // Threshold reaches every grid point.
  bool all_outside() const noexcept { return c <= 0; }
  // Threshold exceeds the largest attainable |i*n - j*m|.
  bool none_outside() const noexcept { return c > m * n; }

  friend bool operator==(const CorridorSpec&, const CorridorSpec&) = default;
};

inline void require_valid(const CorridorSpec& spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw std::invalid_argument("corridor sizes must be positive");
  }
}

inline bool corridor_outside(std::int64_t i, std::int64_t j,
                             const CorridorSpec& spec) noexcept {
  return std::abs(i * spec.n - j * spec.m) >= spec.c;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept {
  return -floor_div(-a, b);
}

}  // namespace detail

struct RowBounds {
  std::int64_t j_min = 0;
  std::int64_t j_max = -1;

  bool empty() const noexcept { return j_min > j_max; }

  friend bool operator==(const RowBounds&, const RowBounds&) = default;
};

// In-corridor columns of row i: i*n - c < j*m < i*n + c, clipped to [0, n].
// Requires c > 0. The result may be empty when 2c/m < 1.
inline RowBounds row_bounds(std::int64_t i, const CorridorSpec& spec) noexcept {
  const std::int64_t lo = detail::floor_div(i * spec.n - spec.c, spec.m) + 1;
  const std::int64_t hi = detail::ceil_div(i * spec.n + spec.c, spec.m) - 1;
  return {std::max<std::int64_t>(0, lo), std::min(spec.n, hi)};
}

// Slots per rolling row: floor(2c/m) + 2, at most n + 1. The open interval of
// in-corridor columns has length 2c/m, so this holds every inside column plus
// at least one outside sentinel.
inline std::int64_t band_width(const CorridorSpec& spec) noexcept {
  return std::min(spec.n + 1, (2 * spec.c) / spec.m + 2);
}

}  // namespace ks2
