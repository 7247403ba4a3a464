#pragma once

#include <Eigen/Dense>
#include <complex>

#include "expframe/grid_spectrum.hpp"
#include "expframe/rng.hpp"

namespace expframe {

/// integral_a^b exp(i*mu*t) dt, evaluated as length * phase * sinc so it stays
/// exact through mu -> 0.
std::complex<double> oscillatory_cell_integral(double a, double b, double mu);

/// Band-limited test function whose transform is, on each grid cell, a
/// trigonometric polynomial sum_k s_{r,k} exp(i*k*(m/d)*t) with |k| <= K.
/// Norms come from coefficient Parseval (the exponentials are orthogonal over
/// a full cell period) and point values from closed-form cell integrals, so
/// the only inexact quantity anywhere downstream is the frequency-sum
/// truncation.
class PWTestFunction {
 public:
  /// coeffs: one row per cell of `grid` (same order), 2K+1 columns for
  /// k = -K..K.
  PWTestFunction(GridSpectrum grid, Eigen::MatrixXcd coeffs);

  static PWTestFunction random(const GridSpectrum& grid, int K, SplitMix64& rng);
  /// K = 0 function with transform constant w_r on cell r (the shape extremal
  /// Gram eigenvectors induce).
  static PWTestFunction from_cell_weights(const GridSpectrum& grid,
                                          const Eigen::VectorXcd& w);

  const GridSpectrum& grid() const noexcept { return grid_; }
  int truncation_order() const noexcept { return K_; }

  double norm_sq() const noexcept;       // exact: cell_length * sum |s|^2
  double coeff_abs_sum() const noexcept; // l1 norm, drives the tail bound

  std::complex<double> operator()(double x) const;

 private:
  GridSpectrum grid_;
  int K_;
  Eigen::MatrixXcd coeffs_;
};

}  // namespace expframe
