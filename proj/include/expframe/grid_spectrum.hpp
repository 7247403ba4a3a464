#pragma once

#include <limits>
#include <vector>

#include "expframe/interval_union.hpp"

namespace expframe {

/// A union of grid cells [2*pi*d*r/m, 2*pi*d*(r+1)/m) for r in I, I a sorted
/// subset of {0,...,m-1}. Measure is 2*pi*d*|I|/m.
class GridSpectrum {
 public:
  GridSpectrum(int m, std::vector<int> cells, double d);

  int m() const noexcept { return m_; }
  const std::vector<int>& cells() const noexcept { return cells_; }
  int n() const noexcept { return static_cast<int>(cells_.size()); }
  double d() const noexcept { return d_; }

  double cell_length() const noexcept;
  double cell_lower(int r) const noexcept;  // 2*pi*d*r/m
  double measure() const noexcept;

  /// The covered set as an interval union (adjacent cells merged).
  IntervalUnion as_interval_union() const;

 private:
  int m_;
  std::vector<int> cells_;
  double d_;
};

struct GridCover {
  GridSpectrum grid;
  double excess;  // grid.measure() - |U|, >= 0
};

/// Outer cover of U (which must lie in [0, 2*pi*d]) by grid cells of order m:
/// a cell is kept iff its intersection with U has positive measure, so the
/// cover is minimal at this order and measure-zero touches add nothing.
/// Throws GridTooCoarse when the excess exceeds max_excess.
GridCover grid_cover(const IntervalUnion& u, double d, int m,
                     double max_excess = std::numeric_limits<double>::infinity());

/// Doubles the grid order starting at m0 until excess <= epsilon_rel * |U|,
/// capped at m_max. Cell boundaries refine exactly under doubling, so the
/// excess is nonincreasing along the search.
GridCover auto_grid_cover(const IntervalUnion& u, double d, double epsilon_rel = 0.01,
                          int m0 = 64, int m_max = 4096);

}  // namespace expframe
