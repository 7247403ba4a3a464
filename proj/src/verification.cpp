#include "expframe/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expframe/error.hpp"
#include "expframe/fourier.hpp"
#include "expframe/parallel.hpp"
#include "expframe/pw.hpp"
#include "expframe/rng.hpp"

namespace expframe {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kInvSqrtTwoPi = 0.3989422804014326779399461;

Eigen::VectorXcd random_unit_vector(int n, SplitMix64& rng) {
  Eigen::VectorXcd w(n);
  for (int i = 0; i < n; ++i) w(i) = rng.gaussian_complex();
  const double nrm = w.norm();
  if (nrm == 0.0) return Eigen::VectorXcd::Unit(n, 0);
  return w / nrm;
}

std::complex<double> indicator_transform(const GridSpectrum& grid, double x) {
  std::complex<double> acc(0.0, 0.0);
  for (int r : grid.cells())
    acc += oscillatory_cell_integral(grid.cell_lower(r), grid.cell_lower(r + 1), -x);
  return kInvSqrtTwoPi * acc;
}

bool window_holds(const GridSpectrum& grid, double eta, double threshold) {
  for (int t = 0; t <= 1024; ++t) {
    const double x = -0.5 * eta + eta * t / 1024.0;
    if (!(std::abs(indicator_transform(grid, x)) > threshold)) return false;
  }
  return true;
}

}  // namespace

std::vector<double> rayleigh_samples(const GridSpectrum& grid, const RowSelection& J,
                                     int count, std::uint64_t seed) {
  if (count < 1) raise(Errc::invalid_argument, "count must be >= 1");
  const Eigen::MatrixXcd B = fourier_submatrix(grid.m(), grid.cells(), J.rows());
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng = derived_rng(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = (B * random_unit_vector(grid.n(), rng)).squaredNorm();
  }
  return out;
}

Witness extremal_witness(const GridSpectrum& grid, const RowSelection& J,
                         ExtremeSide side) {
  const Eigen::MatrixXcd B = fourier_submatrix(grid.m(), grid.cells(), J.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram(B));
  const Eigen::Index col = side == ExtremeSide::min ? 0 : es.eigenvalues().size() - 1;
  Witness w;
  w.w = es.eigenvectors().col(col);
  w.value = (B * w.w).squaredNorm();
  return w;
}

MonteCarloReport pw_monte_carlo(const GridSpectrum& grid, const RowSelection& J, int count,
                                int K, double R, std::uint64_t seed, double tol,
                                int threads) {
  if (count < 1) raise(Errc::invalid_argument, "count must be >= 1");
  if (K < 1) raise(Errc::invalid_argument, "truncation order K must be >= 1");
  const double period = grid.m() / grid.d();
  if (!(R >= 10.0 * period))
    raise(Errc::invalid_argument, "truncation radius R must be >= 10*m/d");
  if (!(tol > 0.0)) raise(Errc::invalid_argument, "tol must be positive");

  const FrameCertificate cert = frame_certificate(grid, J);
  const FrequencySet freq(J, grid.d());
  const std::vector<double> lambdas = freq.enumerate(-R, R);

  const double x_max = K * period;  // largest modulation frequency in any trial
  if (!(R > 2.0 * x_max))
    raise(Errc::truncation_too_severe,
          "R=" + std::to_string(R) + " too close to the coefficient band K*m/d=" +
              std::to_string(x_max));

  struct Trial {
    double ratio = 0.0;
    double tail = 0.0;
  };
  auto trials = parallel_map(
      static_cast<std::size_t>(count), threads, [&](std::size_t i) -> Trial {
        SplitMix64 rng = derived_rng(seed, i);
        const PWTestFunction f = PWTestFunction::random(grid, K, rng);
        double sum = 0.0;
        for (double l : lambdas) sum += std::norm(f(l));
        const double nsq = f.norm_sq();
        // |f(x)| <= c_f / (|x| - x_max) beyond the band, and Lambda carries
        // |J| points per period, so the discarded mass is bounded by
        // 2*|J|*c_f^2*(1/(R-x_max)^2 + (1/period)/(R-x_max)).
        const double c_f = 2.0 * kInvSqrtTwoPi * f.coeff_abs_sum();
        const double gap = R - x_max;
        const double tail_abs = 2.0 * static_cast<double>(J.size()) * c_f * c_f *
                                (1.0 / (gap * gap) + 1.0 / (period * gap));
        return Trial{sum / (grid.d() * nsq), tail_abs / (grid.d() * nsq)};
      });

  MonteCarloReport rep;
  rep.count = count;
  rep.K = K;
  rep.R = R;
  rep.seed = seed;
  rep.tol = tol;
  rep.certified_lo = cert.a_sampling;
  rep.certified_hi = cert.A_sampling;
  rep.min_ratio = trials.front().ratio;
  rep.max_ratio = trials.front().ratio;
  rep.pass = true;
  for (const auto& t : trials) {
    rep.ratios.push_back(t.ratio);
    rep.min_ratio = std::min(rep.min_ratio, t.ratio);
    rep.max_ratio = std::max(rep.max_ratio, t.ratio);
    rep.tail_bound = std::max(rep.tail_bound, t.tail);
    if (cert.a_sampling > 0.0 && t.tail > tol * cert.a_sampling)
      raise(Errc::truncation_too_severe,
            "estimated tail " + std::to_string(t.tail) + " exceeds tol*a_sampling=" +
                std::to_string(tol * cert.a_sampling) + "; raise R");
    const bool ok = t.ratio <= cert.A_sampling * (1.0 + tol) &&
                    t.ratio >= cert.a_sampling * (1.0 - tol) - t.tail;
    rep.pass = rep.pass && ok;
  }
  return rep;
}

IndicatorWindow indicator_window(const GridSpectrum& grid) {
  const double measure = grid.measure();
  const double threshold = measure / 3.0;
  IndicatorWindow out;
  out.h0 = std::abs(indicator_transform(grid, 0.0));

  // |h(0)| = measure/sqrt(2*pi) > measure/3, so a positive window exists.
  double lo = 1.0;
  while (!window_holds(grid, lo, threshold)) {
    lo *= 0.5;
    if (lo < 1e-12) {
      out.eta = lo;
      return out;
    }
  }
  double hi = lo * 2.0;
  while (window_holds(grid, hi, threshold)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) break;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    (window_holds(grid, mid, threshold) ? lo : hi) = mid;
  }
  out.eta = lo;
  return out;
}

DensityReport density_report(const FrequencySet& freq, double omega_measure, double window,
                             double x0, double x1) {
  if (!(window > 0.0)) raise(Errc::invalid_argument, "window must be positive");
  if (!(x1 - x0 >= 10.0 * window))
    raise(Errc::invalid_argument, "scan range must cover at least 10 windows");

  DensityReport rep;
  rep.window = window;
  for (double t = x0; t + window <= x1 * (1.0 + 1e-15); t += 0.25 * window) {
    rep.offsets.push_back(t);
    rep.counts.push_back(freq.count_in(t, t + window));
  }
  rep.min_count = *std::min_element(rep.counts.begin(), rep.counts.end());
  rep.max_count = *std::max_element(rep.counts.begin(), rep.counts.end());
  rep.min_density = static_cast<double>(rep.min_count) / window;
  rep.max_density = static_cast<double>(rep.max_count) / window;
  rep.landau_floor = omega_measure / kTwoPi;

  const double q = window / freq.period();
  rep.window_is_period_multiple = std::abs(q - std::round(q)) <= 1e-9 * std::max(1.0, q) &&
                                  std::round(q) >= 1.0;
  rep.landau_ok =
      !rep.window_is_period_multiple || rep.min_density >= rep.landau_floor * (1.0 - 1e-9);

  // |J| >= n: the Landau floor for the periodic set itself.
  const double n_est = omega_measure * freq.modulus() / (kTwoPi * freq.d());
  rep.j_size_ok = static_cast<double>(freq.selection().size()) + 1e-6 >= n_est;
  return rep;
}

}  // namespace expframe
