#include "expframe/fourier.hpp"

#include <cmath>
#include <string>

#include "expframe/error.hpp"

namespace expframe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

void check_indices(int m, std::span<const int> idx, const char* which) {
  for (int v : idx)
    if (v < 0 || v >= m)
      raise(Errc::index_out_of_range, std::string(which) + " index " + std::to_string(v) +
                                          " outside {0,...," + std::to_string(m - 1) + "}");
}

void check_hermitian(const Eigen::MatrixXcd& G) {
  if (G.rows() != G.cols()) raise(Errc::not_hermitian, "matrix is not square");
  if (G.rows() == 0) raise(Errc::invalid_argument, "matrix is empty");
  const double asym = (G - G.adjoint()).norm();
  if (asym > 1e-8 * std::max(G.norm(), 1e-300))
    raise(Errc::not_hermitian,
          "asymmetry " + std::to_string(asym) + " exceeds 1e-8 * ||G||");
}

}  // namespace

Eigen::MatrixXcd fourier_submatrix(int m, std::span<const int> cols_I,
                                   std::span<const int> rows_J) {
  if (m < 1) raise(Errc::invalid_argument, "order m must be positive");
  if (m > kMaxGridOrder)
    raise(Errc::problem_too_large,
          "order m=" + std::to_string(m) + " exceeds the dense-arithmetic cap " +
              std::to_string(kMaxGridOrder));
  if (cols_I.empty() || rows_J.empty())
    raise(Errc::invalid_argument, "index sets I and J must be nonempty");
  check_indices(m, cols_I, "column");
  check_indices(m, rows_J, "row");

  Eigen::MatrixXcd B(rows_J.size(), cols_I.size());
  for (Eigen::Index a = 0; a < B.rows(); ++a) {
    const long long j = rows_J[static_cast<std::size_t>(a)];
    for (Eigen::Index b = 0; b < B.cols(); ++b) {
      const long long r = cols_I[static_cast<std::size_t>(b)];
      const long long phase = (j * r) % m;
      const double t = kTwoPi * static_cast<double>(phase) / m;
      B(a, b) = std::complex<double>(std::cos(t), std::sin(t));
    }
  }
  return B;
}

EigenExtremes eigen_extremes(const Eigen::MatrixXcd& G) {
  check_hermitian(G);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  const auto& vals = es.eigenvalues();
  EigenExtremes out{vals(0), vals(vals.size() - 1)};
  if (std::abs(out.lambda_min) <= 1e-9 * out.lambda_max) out.lambda_min = 0.0;
  return out;
}

Eigen::VectorXd full_spectrum(const Eigen::MatrixXcd& G) {
  check_hermitian(G);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::MatrixXcd inverse_sqrt(const Eigen::MatrixXcd& M) {
  check_hermitian(M);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  const Eigen::VectorXd vals = es.eigenvalues();
  const double lo = vals(0);
  const double hi = vals(vals.size() - 1);
  if (!(lo > 1e-10 * hi) || !(hi > 0.0))
    raise(Errc::singular_operator, "lambda_min=" + std::to_string(lo) +
                                       " too small next to lambda_max=" + std::to_string(hi));
  const Eigen::VectorXd inv_root = vals.array().rsqrt();
  Eigen::MatrixXcd W =
      es.eigenvectors() * inv_root.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::MatrixXcd S = 0.5 * (W + W.adjoint());
  return S;
}

}  // namespace expframe
