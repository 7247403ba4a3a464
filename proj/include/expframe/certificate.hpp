#pragma once

#include <Eigen/Dense>
#include <vector>

#include "expframe/grid_spectrum.hpp"

namespace expframe {

/// Sorted nonempty subset of {0,...,m-1} selecting rows of the Fourier matrix.
class RowSelection {
 public:
  RowSelection(std::vector<int> rows, int m);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int size() const noexcept { return static_cast<int>(rows_.size()); }
  int modulus() const noexcept { return m_; }

 private:
  std::vector<int> rows_;
  int m_;
};

/// The arithmetic-progression union Lambda = {(j + k*m)/d : j in J, k in Z}.
class FrequencySet {
 public:
  FrequencySet(RowSelection J, double d);

  const RowSelection& selection() const noexcept { return J_; }
  int modulus() const noexcept { return J_.modulus(); }
  double d() const noexcept { return d_; }
  double period() const noexcept { return J_.modulus() / d_; }

  /// Minimal gap between distinct points: (min cyclic gap of J mod m)/d.
  double separation() const noexcept;

  /// All points in [x0, x1), ascending.
  std::vector<double> enumerate(double x0, double x1) const;

  /// #(Lambda intersect [x0, x1)), by exact residue counting. Scaled
  /// coordinates within 1e-9 of an integer are snapped before the boundary
  /// ceiling, so period-aligned windows count exactly.
  long long count_in(double x0, double x1) const;

 private:
  RowSelection J_;
  double d_;
};

/// Exact two-sided bounds certified by the extreme eigenvalues of the Gram
/// matrix G = B^H B of the selected Fourier rows over the grid cells.
/// With lambda in [lambda_min, lambda_max]:
///   sampling constants  a_sampling = lambda_min/m,  A_sampling = lambda_max/m
///     (per unit scale: sum_{Lambda} |f(lambda)|^2 in [d*a, d*A] * ||f||^2
///      for f in the Paley-Wiener space of the grid set),
///   frame bounds of the exponential system in L^2 of the grid set
///     a_frame = 2*pi*d*lambda_min/m,  A_frame = 2*pi*d*lambda_max/m,
///   dimensionless constants  normalized_lower/upper = lambda_min/n, lambda_max/n
///     (an orthonormal basis gives exactly 1; frame bounds equal these times
///      the measure of the set).
struct FrameCertificate {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double a_sampling = 0.0;
  double A_sampling = 0.0;
  double a_frame = 0.0;
  double A_frame = 0.0;
  double normalized_lower = 0.0;
  double normalized_upper = 0.0;
  bool is_frame = false;
  int m = 0;
  int n = 0;
  int J_size = 0;
  double d = 1.0;
};

FrameCertificate frame_certificate(const GridSpectrum& grid, const RowSelection& J);

/// Full Gram spectrum, ascending (for CSV dumps).
Eigen::VectorXd gram_spectrum(const GridSpectrum& grid, const RowSelection& J);

}  // namespace expframe
