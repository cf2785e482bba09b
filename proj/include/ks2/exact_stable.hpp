#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ks2/corridor.hpp"
#include "ks2/error.hpp"

namespace ks2 {

// One rolling row of the banded sweep: values[k] is the outside-path
// proportion C at grid point (i, start_j + k). Slots past column n hold 1.
struct BandRow {
  std::int64_t start_j = 0;
  std::vector<double> values;

  std::int64_t width() const noexcept {
    return static_cast<std::int64_t>(values.size());
  }
  bool covers(std::int64_t j) const noexcept {
    return j >= start_j && j < start_j + width();
  }
  // C at column j; columns off the band are outside the corridor.
  double at(std::int64_t j) const noexcept {
    return covers(j) ? values[static_cast<std::size_t>(j - start_j)] : 1.0;
  }
};

namespace detail {

struct no_row_observer {
  void operator()(std::int64_t, const BandRow&) const noexcept {}
};

}  // namespace detail

// P2 = Prob[D >= c/(m*n)] via the recurrence on C(i, j), the proportion of
// lattice paths from the origin to (i, j) that leave the corridor:
//
//   C = 1                                     outside,
//   C = 0                                     inside with i == 0 or j == 0,
//   C = (C(i-1, j) * i + C(i, j-1) * j) / (i + j)   otherwise.
//
// Every interior value is a convex combination of its predecessors, so values
// stay in [0, 1] and small tails never pass through 1 - P2. Rows run over
// i = 0..m, each holding band_width(spec) slots starting at the row's first
// in-corridor column. The observer sees each finished row.
template <class RowObserver>
double p2_stable(const CorridorSpec& spec, RowObserver&& on_row) {
  require_valid(spec);
  if (spec.all_outside()) return 1.0;
  if (spec.none_outside()) return 0.0;

  const std::int64_t width = band_width(spec);
  BandRow prev{0, std::vector<double>(static_cast<std::size_t>(width), 1.0)};
  BandRow row = prev;

  for (std::int64_t i = 0; i <= spec.m; ++i) {
    const RowBounds bounds = row_bounds(i, spec);
    // Every path crosses every row; a row with no inside column traps all.
    if (bounds.empty()) return 1.0;

    std::swap(prev, row);
    row.start_j = bounds.j_min;
    double left = 1.0;  // C(i, start_j - 1) is outside
    for (std::int64_t k = 0; k < width; ++k) {
      const std::int64_t j = row.start_j + k;
      double val;
      if (j > bounds.j_max) {
        val = 1.0;
      } else if (i == 0 || j == 0) {
        val = 0.0;
      } else {
        val = (prev.at(j) * static_cast<double>(i) + left * static_cast<double>(j)) /
              static_cast<double>(i + j);
      }
      row.values[static_cast<std::size_t>(k)] = val;
      left = val;
    }
    on_row(i, std::as_const(row));
  }
  return row.at(spec.n);
}

inline double p2_stable(const CorridorSpec& spec) {
  return p2_stable(spec, detail::no_row_observer{});
}

inline constexpr std::int64_t full_table_limit = 100'000'000;

// Same recurrence over full-width rows (j = 0..n) with no banding. A
// reference for the banded sweep; refuses m*n above full_table_limit.
inline double p2_stable_full(const CorridorSpec& spec) {
  require_valid(spec);
  if (spec.m * spec.n > full_table_limit) {
    throw table_too_large("full table " + std::to_string(spec.m) + "x" +
                          std::to_string(spec.n) + " exceeds limit");
  }
  if (spec.all_outside()) return 1.0;
  if (spec.none_outside()) return 0.0;

  std::vector<double> row(static_cast<std::size_t>(spec.n + 1));
  for (std::int64_t i = 0; i <= spec.m; ++i) {
    for (std::int64_t j = 0; j <= spec.n; ++j) {
      double& cell = row[static_cast<std::size_t>(j)];
      if (corridor_outside(i, j, spec)) {
        cell = 1.0;
      } else if (i == 0 || j == 0) {
        cell = 0.0;
      } else {
        // cell still holds C(i-1, j)
        cell = (cell * static_cast<double>(i) +
                row[static_cast<std::size_t>(j - 1)] * static_cast<double>(j)) /
               static_cast<double>(i + j);
      }
    }
  }
  return row[static_cast<std::size_t>(spec.n)];
}

// Whole (m+1) x (n+1) table of C, row-major. Small grids only; used to
// inspect intermediate cells.
inline std::vector<double> outside_proportion_table(const CorridorSpec& spec) {
  require_valid(spec);
  if ((spec.m + 1) * (spec.n + 1) > full_table_limit / 10) {
    throw table_too_large("table too large to materialise");
  }
  const auto cols = static_cast<std::size_t>(spec.n + 1);
  std::vector<double> table(static_cast<std::size_t>(spec.m + 1) * cols);
  auto at = [&](std::int64_t i, std::int64_t j) -> double& {
    return table[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)];
  };
  for (std::int64_t i = 0; i <= spec.m; ++i) {
    for (std::int64_t j = 0; j <= spec.n; ++j) {
      if (corridor_outside(i, j, spec)) {
        at(i, j) = 1.0;
      } else if (i == 0 || j == 0) {
        at(i, j) = 0.0;
      } else {
        at(i, j) = (at(i - 1, j) * static_cast<double>(i) +
                    at(i, j - 1) * static_cast<double>(j)) /
                   static_cast<double>(i + j);
      }
    }
  }
  return table;
}

}  // namespace ks2
