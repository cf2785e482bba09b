#pragma once

#include <algorithm>
#include <cmath>

#include "ks2/statistic.hpp"

namespace ks2 {

// x = sqrt(m*n / (m+n)) * D.
struct ScaledStatistic {
  double x = 0.0;
};

inline ScaledStatistic scale_statistic(const KsStatistic& stat) {
  const double m = static_cast<double>(stat.m);
  const double n = static_cast<double>(stat.n);
  return {std::sqrt(m * n / (m + n)) * (static_cast<double>(stat.c) / (m * n))};
}

inline constexpr double smirnov_small_x = 0.05;

// Limiting two-sided tail 2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2).
// Stops before the first term below 1e-16 of the partial sum (or below
// 1e-300). Returns 1 for x <= smirnov_small_x.
inline double smirnov_tail(ScaledStatistic scaled) {
  const double x = scaled.x;
  if (!(x > smirnov_small_x)) return 1.0;
  const double x2 = x * x;
  double sum = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const double kk = static_cast<double>(k);
    const double term = std::exp(-2.0 * kk * kk * x2);
    if (k > 1 && (term < 1e-16 * std::abs(sum) || term < 1e-300)) break;
    sum += (k % 2 == 1) ? term : -term;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace ks2
