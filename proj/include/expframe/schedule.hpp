#pragma once

#include <vector>

namespace expframe {

/// Two-sided bound schedule for iterated halving. Starting from
/// alpha_0 = beta_0 = 1, each split multiplies the lower bound by
/// (1 - 5*sqrt(delta/alpha_j))/2 and the upper by (1 + 5*sqrt(delta/alpha_j))/2.
/// L is the greatest index with alpha_L >= 100*delta (L = 0 happens for delta
/// close to 1/100); the sequences stop at index L+1, where
/// 25*delta <= alpha_{L+1} < 100*delta and beta_{L+1} < C_product * alpha_{L+1}.
struct HalvingSchedule {
  double delta = 0.0;
  std::vector<double> alphas;  // indices 0..L+1
  std::vector<double> betas;
  int L = 0;
  double C_product = 0.0;  // prod_j (1+2^{-1-j/2})/(1-2^{-1-j/2}), to 1e-12
};

/// Requires 0 < delta < 1/100 (DeltaOutOfRange otherwise).
HalvingSchedule compute_schedule(double delta);

}  // namespace expframe
