#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "expframe/certificate.hpp"
#include "expframe/grid_spectrum.hpp"

namespace expframe {

/// ||B w||^2 for random unit vectors w; every value must land inside the
/// certified eigenvalue range (Rayleigh quotients of the Gram).
std::vector<double> rayleigh_samples(const GridSpectrum& grid, const RowSelection& J,
                                     int count, std::uint64_t seed);

enum class ExtremeSide { min, max };

struct Witness {
  Eigen::VectorXcd w;   // unit eigenvector of the Gram at the requested extreme
  double value = 0.0;   // ||B w||^2, recomputed directly
};

Witness extremal_witness(const GridSpectrum& grid, const RowSelection& J, ExtremeSide side);

struct MonteCarloReport {
  std::vector<double> ratios;  // per-trial (sum_Lambda |f|^2) / (d * ||f||^2)
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double certified_lo = 0.0;   // a_sampling
  double certified_hi = 0.0;   // A_sampling
  double tail_bound = 0.0;     // worst per-trial relative truncation tail
  double tol = 0.0;
  bool pass = false;
  int count = 0;
  int K = 0;
  double R = 0.0;
  std::uint64_t seed = 0;
};

/// Samples random band-limited test functions of the grid set and checks the
/// certified sampling inequality: every ratio must satisfy
///   a_sampling*(1-tol) - tail <= ratio <= A_sampling*(1+tol).
/// Norms are exact (coefficient Parseval); sums over Lambda are truncated to
/// [-R, R) with an explicit O(1/R) tail estimate. Requires R >= 10*m/d and
/// throws TruncationTooSevere when the tail estimate exceeds tol*a_sampling.
MonteCarloReport pw_monte_carlo(const GridSpectrum& grid, const RowSelection& J, int count,
                                int K, double R, std::uint64_t seed, double tol = 0.02,
                                int threads = 1);

struct IndicatorWindow {
  double eta = 0.0;  // largest window where |h| stays above measure/3 (sampled)
  double h0 = 0.0;   // h(0) = measure / sqrt(2*pi)
};

/// h is the transform of the indicator of the grid set, evaluated in closed
/// form. eta is found by doubling/bisection on the predicate
/// min |h(x)| > measure/3 over x in [-eta/2, eta/2], sampled at step eta/1024.
/// Any frame certificate then caps the point count of Lambda in windows of
/// length eta by 9 * A_frame / measure.
IndicatorWindow indicator_window(const GridSpectrum& grid);

struct DensityReport {
  double window = 0.0;
  std::vector<double> offsets;      // left edges, stepping window/4
  std::vector<long long> counts;    // #(Lambda intersect [offset, offset+window))
  long long min_count = 0;
  long long max_count = 0;
  double min_density = 0.0;         // min count / window
  double max_density = 0.0;
  double landau_floor = 0.0;        // omega_measure / (2*pi)
  bool window_is_period_multiple = false;
  bool landau_ok = false;           // min density >= floor (exact when period-aligned)
  bool j_size_ok = false;           // |J| >= n recovered from omega_measure
};

/// Sliding-window point counts of Lambda across [x0, x1), offsets stepping by
/// window/4. The scan must cover at least 10 windows. When the window is a
/// multiple of the period m/d, counts are constant (= multiple * |J|) and the
/// Landau floor check is exact.
DensityReport density_report(const FrequencySet& freq, double omega_measure, double window,
                             double x0, double x1);

}  // namespace expframe
