#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ks2/corridor.hpp"

namespace ks2 {

namespace detail {

// Portable uniform integer in [0, bound); std::uniform_int_distribution is
// not specified bit-for-bit across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace detail

// Deterministic thresholds c in [1, m*n] for an (m, n) pair. Even draws are
// uniform in c; odd draws are uniform in the scaled statistic x on [0.2, 3],
// which is where p-values are moderate. Sorted, duplicates kept.
inline std::vector<std::int64_t> sample_thresholds(std::int64_t m, std::int64_t n,
                                                   int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(m) << 32) ^
                      static_cast<std::uint64_t>(n));
  const std::int64_t mn = m * n;
  const double scale = std::sqrt(static_cast<double>(mn) / static_cast<double>(m + n));
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::int64_t c;
    if (k % 2 == 0) {
      c = 1 + static_cast<std::int64_t>(
                  detail::uniform_below(rng, static_cast<std::uint64_t>(mn)));
    } else {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double x = 0.2 + 2.8 * u;
      c = static_cast<std::int64_t>(std::ceil(x / scale * static_cast<double>(mn)));
    }
    out.push_back(std::clamp<std::int64_t>(c, 1, mn));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ks2
