#include "expframe/grid_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expframe/error.hpp"

namespace expframe {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

GridSpectrum::GridSpectrum(int m, std::vector<int> cells, double d)
    : m_(m), cells_(std::move(cells)), d_(d) {
  if (m_ < 1) raise(Errc::invalid_argument, "grid order m must be positive");
  if (!(d_ > 0.0) || !std::isfinite(d_))
    raise(Errc::invalid_argument, "grid scale d must be positive and finite");
  if (cells_.empty()) raise(Errc::empty_spectrum, "grid cell set I is empty");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.front() < 0 || cells_.back() >= m_)
    raise(Errc::index_out_of_range,
          "cell index outside {0,...," + std::to_string(m_ - 1) + "}");
}

double GridSpectrum::cell_length() const noexcept { return kTwoPi * d_ / m_; }

double GridSpectrum::cell_lower(int r) const noexcept { return (kTwoPi * d_) * r / m_; }

double GridSpectrum::measure() const noexcept {
  return kTwoPi * d_ * static_cast<double>(cells_.size()) / m_;
}

IntervalUnion GridSpectrum::as_interval_union() const {
  std::vector<Interval> parts;
  parts.reserve(cells_.size());
  for (int r : cells_) parts.push_back({cell_lower(r), cell_lower(r + 1)});
  return validate(std::move(parts));
}

GridCover grid_cover(const IntervalUnion& u, double d, int m, double max_excess) {
  if (m < 1) raise(Errc::invalid_argument, "grid order m must be positive");
  if (!(d > 0.0)) raise(Errc::invalid_argument, "scale d must be positive");
  const double window = kTwoPi * d;
  if (u.inf() < 0.0 || u.sup() > window)
    raise(Errc::invalid_argument,
          "cover stage: spectrum must lie in [0, 2*pi*d]; normalize it first");

  // Exact endpoint comparisons; a cell joins the cover iff it overlaps U on a
  // set of positive length.
  std::vector<int> cells;
  for (const auto& iv : u.intervals()) {
    // Candidate range widened by one cell each way; the exact test decides.
    int r_lo = static_cast<int>(std::floor(iv.a / window * m)) - 1;
    int r_hi = static_cast<int>(std::floor(iv.b / window * m)) + 1;
    r_lo = std::clamp(r_lo, 0, m - 1);
    r_hi = std::clamp(r_hi, 0, m - 1);
    for (int r = r_lo; r <= r_hi; ++r) {
      const double c_lo = window * r / m;
      const double c_hi = window * (r + 1) / m;
      if (std::max(iv.a, c_lo) < std::min(iv.b, c_hi)) cells.push_back(r);
    }
  }
  GridSpectrum grid(m, std::move(cells), d);
  const double excess = std::max(0.0, grid.measure() - u.measure());
  if (excess > max_excess)
    raise(Errc::grid_too_coarse, "cover stage: excess " + std::to_string(excess) +
                                     " exceeds tolerance " + std::to_string(max_excess) +
                                     " at m=" + std::to_string(m));
  return GridCover{std::move(grid), excess};
}

GridCover auto_grid_cover(const IntervalUnion& u, double d, double epsilon_rel, int m0,
                          int m_max) {
  if (!(epsilon_rel >= 0.0)) raise(Errc::invalid_argument, "cover tolerance must be >= 0");
  const double tol = epsilon_rel * u.measure();
  GridCover best = grid_cover(u, d, m0);
  for (int m = m0; best.excess > tol;) {
    if (m >= m_max)
      raise(Errc::grid_too_coarse,
            "cover stage: excess " + std::to_string(best.excess) +
                " still exceeds tolerance " + std::to_string(tol) + " at the m=" +
                std::to_string(m_max) + " cap; relax --epsilon-cover or simplify the spectrum");
    m *= 2;
    best = grid_cover(u, d, m);
  }
  return best;
}

}  // namespace expframe
