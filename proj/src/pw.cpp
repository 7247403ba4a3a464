#include "expframe/pw.hpp"

#include <cmath>

#include "expframe/error.hpp"

namespace expframe {

namespace {
constexpr double kInvSqrtTwoPi = 0.3989422804014326779399461;

double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}
}  // namespace

std::complex<double> oscillatory_cell_integral(double a, double b, double mu) {
  const double h = b - a;
  const double c = 0.5 * (a + b);
  const double phase = mu * c;
  return h * sinc(0.5 * mu * h) * std::complex<double>(std::cos(phase), std::sin(phase));
}

PWTestFunction::PWTestFunction(GridSpectrum grid, Eigen::MatrixXcd coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != grid_.n() || coeffs_.cols() < 1 || coeffs_.cols() % 2 == 0)
    raise(Errc::invalid_argument,
          "coefficients must be n x (2K+1) with one row per grid cell");
  K_ = static_cast<int>(coeffs_.cols() / 2);
}

PWTestFunction PWTestFunction::random(const GridSpectrum& grid, int K, SplitMix64& rng) {
  if (K < 1) raise(Errc::invalid_argument, "truncation order K must be >= 1");
  Eigen::MatrixXcd c(grid.n(), 2 * K + 1);
  for (Eigen::Index r = 0; r < c.rows(); ++r)
    for (Eigen::Index k = 0; k < c.cols(); ++k) c(r, k) = rng.gaussian_complex();
  return PWTestFunction(grid, std::move(c));
}

PWTestFunction PWTestFunction::from_cell_weights(const GridSpectrum& grid,
                                                 const Eigen::VectorXcd& w) {
  if (w.size() != grid.n())
    raise(Errc::invalid_argument, "weight vector must have one entry per cell");
  Eigen::MatrixXcd c(grid.n(), 1);
  c.col(0) = w;
  return PWTestFunction(grid, std::move(c));
}

double PWTestFunction::norm_sq() const noexcept {
  return grid_.cell_length() * coeffs_.squaredNorm();
}

double PWTestFunction::coeff_abs_sum() const noexcept {
  return coeffs_.cwiseAbs().sum();
}

std::complex<double> PWTestFunction::operator()(double x) const {
  const double mod_step = grid_.m() / grid_.d();  // frequency step of the cell polynomials
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index row = 0; row < coeffs_.rows(); ++row) {
    const int r = grid_.cells()[static_cast<std::size_t>(row)];
    const double a = grid_.cell_lower(r);
    const double b = grid_.cell_lower(r + 1);
    for (int k = -K_; k <= K_; ++k) {
      const std::complex<double> s = coeffs_(row, k + K_);
      if (s == std::complex<double>(0.0, 0.0)) continue;
      acc += s * oscillatory_cell_integral(a, b, k * mod_step - x);
    }
  }
  return kInvSqrtTwoPi * acc;
}

}  // namespace expframe
