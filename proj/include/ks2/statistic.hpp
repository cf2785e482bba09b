#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "ks2/error.hpp"

namespace ks2 {

// An ordered, validated sample. Values are finite and stored ascending.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw empty_sample();
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!std::isfinite(values_[k])) throw non_finite_value(k);
    }
    std::sort(values_.begin(), values_.end());
  }

  std::span<const double> values() const noexcept { return values_; }
  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(values_.size());
  }

 private:
  std::vector<double> values_;
};

// The two-sample statistic D = c / (m * n), kept as the integer numerator so
// downstream corridor tests stay exact.
struct KsStatistic {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t c = 0;

  double d() const noexcept {
    return static_cast<double>(c) / (static_cast<double>(m) * static_cast<double>(n));
  }

  friend bool operator==(const KsStatistic&, const KsStatistic&) = default;
};

enum class TiePolicy { reject, resolve };

// True when some value occurs in both samples.
inline bool has_cross_ties(const Sample& xs, const Sample& ys) {
  auto a = xs.values();
  auto b = ys.values();
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] < b[q]) {
      ++p;
    } else if (b[q] < a[p]) {
      ++q;
    } else {
      return true;
    }
  }
  return false;
}

// Walks the merged order of both samples. At each distinct value every copy
// of it is consumed from both sides before |i*n - j*m| is evaluated, which is
// the ECDF difference at that jump point scaled by m*n.
inline KsStatistic compute_statistic(const Sample& xs, const Sample& ys,
                                     TiePolicy policy = TiePolicy::resolve) {
  auto a = xs.values();
  auto b = ys.values();
  const std::int64_t m = xs.size();
  const std::int64_t n = ys.size();

  std::size_t p = 0, q = 0;
  std::int64_t best = 0;
  while (p < a.size() || q < b.size()) {
    double v;
    if (q == b.size() || (p < a.size() && a[p] < b[q])) {
      v = a[p];
    } else {
      v = b[q];
    }
    const bool in_a = p < a.size() && a[p] == v;
    const bool in_b = q < b.size() && b[q] == v;
    if (in_a && in_b && policy == TiePolicy::reject) throw tie_rejected(v);
    while (p < a.size() && a[p] == v) ++p;
    while (q < b.size() && b[q] == v) ++q;
    const std::int64_t i = static_cast<std::int64_t>(p);
    const std::int64_t j = static_cast<std::int64_t>(q);
    best = std::max(best, std::abs(i * n - j * m));
  }
  return {m, n, best};
}

}  // namespace ks2
