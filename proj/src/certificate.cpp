#include "expframe/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expframe/error.hpp"
#include "expframe/fourier.hpp"

namespace expframe {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;

// ceil(a/b) for integers, b > 0.
long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if (a % b > 0) ++q;
  return q;
}

// Scale a real coordinate into the integer lattice J + mZ, snapping values
// within 1e-9 (relative) of an integer so period-aligned windows are exact.
double scale_coord(double x, double d) {
  double y = x * d;
  const double r = std::round(y);
  if (std::abs(y - r) <= 1e-9 * std::max(1.0, std::abs(y))) y = r;
  return y;
}

}  // namespace

RowSelection::RowSelection(std::vector<int> rows, int m) : rows_(std::move(rows)), m_(m) {
  if (m_ < 1) raise(Errc::invalid_argument, "modulus m must be positive");
  if (rows_.empty()) raise(Errc::invalid_argument, "row selection J is empty");
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
  if (rows_.front() < 0 || rows_.back() >= m_)
    raise(Errc::index_out_of_range,
          "row index outside {0,...," + std::to_string(m_ - 1) + "}");
}

FrequencySet::FrequencySet(RowSelection J, double d) : J_(std::move(J)), d_(d) {
  if (!(d_ > 0.0) || !std::isfinite(d_))
    raise(Errc::invalid_argument, "scale d must be positive and finite");
}

double FrequencySet::separation() const noexcept {
  const auto& j = J_.rows();
  const int m = J_.modulus();
  if (j.size() == 1) return m / d_;
  int gap = j.front() + m - j.back();  // wrap-around gap
  for (std::size_t i = 1; i < j.size(); ++i) gap = std::min(gap, j[i] - j[i - 1]);
  return gap / d_;
}

std::vector<double> FrequencySet::enumerate(double x0, double x1) const {
  std::vector<double> out;
  if (!(x0 < x1)) return out;
  const double lo_s = scale_coord(x0, d_);
  const double hi_s = scale_coord(x1, d_);
  const long long lo = static_cast<long long>(std::ceil(lo_s));
  const long long hi = static_cast<long long>(std::ceil(hi_s));
  const long long m = J_.modulus();
  for (int j : J_.rows()) {
    const long long k_lo = ceil_div(lo - j, m);
    const long long k_hi = ceil_div(hi - j, m);
    for (long long k = k_lo; k < k_hi; ++k)
      out.push_back(static_cast<double>(j + k * m) / d_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long FrequencySet::count_in(double x0, double x1) const {
  if (!(x0 < x1)) return 0;
  const long long lo = static_cast<long long>(std::ceil(scale_coord(x0, d_)));
  const long long hi = static_cast<long long>(std::ceil(scale_coord(x1, d_)));
  const long long m = J_.modulus();
  long long total = 0;
  for (int j : J_.rows()) total += std::max<long long>(0, ceil_div(hi - j, m) - ceil_div(lo - j, m));
  return total;
}

FrameCertificate frame_certificate(const GridSpectrum& grid, const RowSelection& J) {
  if (J.modulus() != grid.m())
    raise(Errc::invalid_argument, "row selection modulus does not match the grid order");
  const Eigen::MatrixXcd B = fourier_submatrix(grid.m(), grid.cells(), J.rows());
  const EigenExtremes ex = eigen_extremes(gram(B));

  FrameCertificate c;
  c.lambda_min = ex.lambda_min;
  c.lambda_max = ex.lambda_max;
  c.m = grid.m();
  c.n = grid.n();
  c.J_size = J.size();
  c.d = grid.d();
  c.a_sampling = ex.lambda_min / c.m;
  c.A_sampling = ex.lambda_max / c.m;
  c.a_frame = kTwoPi * c.d * ex.lambda_min / c.m;
  c.A_frame = kTwoPi * c.d * ex.lambda_max / c.m;
  c.normalized_lower = ex.lambda_min / c.n;
  c.normalized_upper = ex.lambda_max / c.n;
  c.is_frame = ex.lambda_min > 0.0;
  return c;
}

Eigen::VectorXd gram_spectrum(const GridSpectrum& grid, const RowSelection& J) {
  if (J.modulus() != grid.m())
    raise(Errc::invalid_argument, "row selection modulus does not match the grid order");
  const Eigen::MatrixXcd B = fourier_submatrix(grid.m(), grid.cells(), J.rows());
  return full_spectrum(gram(B));
}

}  // namespace expframe
