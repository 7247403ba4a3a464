#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "expframe/certificate.hpp"
#include "expframe/error.hpp"
#include "expframe/fourier.hpp"

namespace expframe {

enum class SelectionMethod { exhaustive, random_certified, greedy_swap };

struct SelectionConfig {
  SelectionMethod method = SelectionMethod::random_certified;
  std::uint64_t seed = 0;
  int max_attempts = 1000;
  // Multiplicative tolerance on the two-sided partition targets: a part
  // certifies when lambda_min >= target_lo/(1+slack) and
  // lambda_max <= target_hi*(1+slack). The worst-case targets are rarely
  // attained exactly by any finite search, so slack=0 is only for oracles.
  double slack = 0.05;
};

struct Partition {
  std::vector<int> S1, S2;  // disjoint, sorted; S1 carries index 0
  EigenExtremes bounds1, bounds2;  // extremes of sum v_i v_i^H over each part
};

struct SelectionStep {
  std::vector<int> chosen;  // absolute row indices kept after the split
  double alpha_target = 0.0;
  double beta_target = 0.0;
  double achieved_min = 0.0;  // extremes of the kept part operator (rows/sqrt(m))
  double achieved_max = 0.0;
};

struct SelectionTrace {
  std::vector<SelectionStep> steps;
  std::vector<int> final_J;
};

/// Carries the best partition found when no candidate certified, so callers
/// can report how close the search came. iterated_halving attaches the steps
/// completed before the failure.
class NoCertifiedPartition : public Error {
 public:
  NoCertifiedPartition(const std::string& what, Partition best)
      : Error(Errc::no_certified_partition, what), best_(std::move(best)) {}
  const Partition& best() const noexcept { return best_; }

  void set_completed_steps(std::vector<SelectionStep> steps) { steps_ = std::move(steps); }
  const std::vector<SelectionStep>& completed_steps() const noexcept { return steps_; }

 private:
  Partition best_;
  std::vector<SelectionStep> steps_;
};

/// Splits the columns v_i of `vectors` into two parts whose operators
/// sum_{i in S} v_i v_i^H both satisfy the halving targets
///   alpha*(1-g)/2 <= lambda <= beta*(1+g)/2,   g = 5*sqrt(delta_eff/alpha),
/// relaxed by cfg.slack, where delta_eff = max_i ||v_i||^2. The search runs
/// over the whitened vectors u_i = M^{-1/2} v_i (M = sum v_i v_i^H), where the
/// two part operators sum to the identity; certification is always done on the
/// original vectors. Throws NoCertifiedPartition when the search exhausts.
Partition partition_step(const Eigen::MatrixXcd& vectors, double alpha, double beta,
                         const SelectionConfig& cfg, int threads = 1);

/// Row-subset construction by iterated halving. When n/m >= 1/100 the full row
/// set already satisfies exact bounds (lambda = m) and is returned as is.
/// Otherwise the vectors are the conjugated rows of the partial Fourier matrix
/// scaled by 1/sqrt(m) and partition_step is applied L+1 times along the
/// schedule, keeping a certified part each time (smaller part preferred, ties
/// to the lexicographically smallest index set). Trace bounds live on the
/// scaled vectors: multiply by m to compare with Gram eigenvalues.
std::pair<RowSelection, SelectionTrace> iterated_halving(int m, std::span<const int> cells,
                                                         const SelectionConfig& cfg,
                                                         int threads = 1);

struct SelectionResult {
  RowSelection J;
  FrameCertificate certificate;
  SelectionTrace trace;
};

/// Dispatches to iterated_halving. For m <= 20 with the exhaustive method,
/// returns instead the global optimum: the nonempty subset minimizing
/// lambda_max/lambda_min (ties: smaller |J|, then lexicographic). The
/// certificate is always recomputed from scratch.
SelectionResult select_rows(const GridSpectrum& grid, const SelectionConfig& cfg,
                            int threads = 1);

}  // namespace expframe
