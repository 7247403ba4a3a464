#pragma once

#include <Eigen/Dense>
#include <span>

namespace expframe {

/// Hard cap on the grid order; everything is dense double precision.
inline constexpr int kMaxGridOrder = 4096;

/// Submatrix of the m-point Fourier matrix: entry (row j, col r) =
/// exp(2*pi*i*j*r/m), rows indexed by J ascending, columns by I ascending.
/// Phases are reduced mod m in integer arithmetic, so entries are exactly
/// periodic in j and r.
Eigen::MatrixXcd fourier_submatrix(int m, std::span<const int> cols_I,
                                   std::span<const int> rows_J);

/// B^H * B, symmetrized by averaging with its own adjoint.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> gram(
    const Eigen::MatrixBase<Derived>& B) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat G = B.adjoint() * B;
  Mat S = 0.5 * (G + G.adjoint());
  return S;
}

struct EigenExtremes {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// Extreme eigenvalues of a Hermitian PSD matrix. lambda_min within
/// 1e-9*lambda_max of zero is clamped to 0 (roundoff on a PSD operator).
/// Throws NotHermitian if the asymmetry exceeds 1e-8 * ||G||_F.
EigenExtremes eigen_extremes(const Eigen::MatrixXcd& G);

/// All eigenvalues, ascending.
Eigen::VectorXd full_spectrum(const Eigen::MatrixXcd& G);

/// M^{-1/2} via eigendecomposition. Throws SingularOperator when
/// lambda_min(M) <= 1e-10 * lambda_max(M).
Eigen::MatrixXcd inverse_sqrt(const Eigen::MatrixXcd& M);

}  // namespace expframe
