#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include "ks2/corridor.hpp"

namespace ks2 {
namespace {

TEST(Corridor, OriginInsideForPositiveThreshold) {
  for (std::int64_t c = 1; c < 10; ++c) {
    EXPECT_FALSE(corridor_outside(0, 0, {3, 4, c}));
  }
}

TEST(Corridor, BoundaryCountsAsOutside) {
  EXPECT_TRUE(corridor_outside(1, 0, {1, 1, 1}));
}

TEST(Corridor, CentreOfSquareIsInside) {
  const CorridorSpec spec{2, 2, 2};
  EXPECT_FALSE(corridor_outside(1, 1, spec));
  // floating evaluation agrees away from the boundary
  EXPECT_LT(std::abs(1.0 / 2 - 1.0 / 2), 2.0 / 4);
}

TEST(Corridor, DegenerateThresholds) {
  const CorridorSpec all{3, 7, 0};
  EXPECT_TRUE(all.all_outside());
  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t j = 0; j <= 7; ++j) EXPECT_TRUE(corridor_outside(i, j, all));
  }
  const CorridorSpec none{3, 7, 22};
  EXPECT_TRUE(none.none_outside());
  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t j = 0; j <= 7; ++j) EXPECT_FALSE(corridor_outside(i, j, none));
  }
}

TEST(Corridor, RowBoundsExamples) {
  EXPECT_EQ(row_bounds(0, {5, 5, 5}), (RowBounds{0, 0}));
  // |8 - 4j| < 4 only at j = 2; doubling c opens the row to {1, 2, 3}
  EXPECT_EQ(row_bounds(2, {4, 4, 4}), (RowBounds{2, 2}));
  EXPECT_EQ(row_bounds(2, {4, 4, 8}), (RowBounds{1, 3}));
  // |2*2 - 2*j| < 2 only at j = 2
  EXPECT_EQ(row_bounds(2, {2, 2, 2}), (RowBounds{2, 2}));
}

TEST(Corridor, RowCanBeEmpty) {
  // 2c/m < 1: row 1 asks for 0 < 3j < 2
  EXPECT_TRUE(row_bounds(1, {3, 1, 1}).empty());
}

TEST(Corridor, RowBoundsMatchExhaustiveScan) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t c = 1; c <= m * n; ++c) {
        const CorridorSpec spec{m, n, c};
        const std::int64_t width = band_width(spec);
        for (std::int64_t i = 0; i <= m; ++i) {
          std::int64_t lo = n + 1, hi = -1;
          for (std::int64_t j = 0; j <= n; ++j) {
            if (!corridor_outside(i, j, spec)) {
              lo = std::min(lo, j);
              hi = std::max(hi, j);
            }
          }
          const RowBounds b = row_bounds(i, spec);
          if (hi < 0) {
            EXPECT_TRUE(b.empty()) << m << " " << n << " " << c << " " << i;
            continue;
          }
          ASSERT_EQ(b, (RowBounds{lo, hi})) << m << " " << n << " " << c << " " << i;
          // inside columns form a contiguous run that fits the band
          for (std::int64_t j = lo; j <= hi; ++j) EXPECT_FALSE(corridor_outside(i, j, spec));
          EXPECT_LE(hi - lo + 1, width);
          if (width <= n) {
            EXPECT_LE(hi - lo + 2, width);
          }
        }
      }
    }
  }
}

TEST(Corridor, BandWidthFormula) {
  EXPECT_EQ(band_width({500, 500, 125000}), 501);  // 2*250 + 2 clamped to n + 1
  EXPECT_EQ(band_width({1000, 1000, 10000}), 22);
  EXPECT_EQ(band_width({10, 3, 4}), 2);
}

}  // namespace
}  // namespace ks2
