#include "expframe/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "expframe/parallel.hpp"
#include "expframe/rng.hpp"
#include "expframe/schedule.hpp"

namespace expframe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXcd part_operator(const Eigen::MatrixXcd& V, const std::vector<int>& part) {
  Eigen::MatrixXcd Vs(V.rows(), static_cast<Eigen::Index>(part.size()));
  for (std::size_t i = 0; i < part.size(); ++i) Vs.col(static_cast<Eigen::Index>(i)) = V.col(part[i]);
  Eigen::MatrixXcd A = Vs * Vs.adjoint();
  Eigen::MatrixXcd S = 0.5 * (A + A.adjoint());
  return S;
}

// Cost of a split of a Parseval (whitened) family: the two part operators sum
// to the identity, so max(lambda_max(W1), lambda_max(W2)) =
// max(lambda_max(W1), 1 - lambda_min(W1)). Lower is more balanced.
double whitened_cost(const Eigen::MatrixXcd& W1) {
  const EigenExtremes e = eigen_extremes(W1);
  return std::max(e.lambda_max, 1.0 - e.lambda_min);
}

struct Targets {
  double lo_eff = 0.0;  // certify: lambda_min >= lo_eff (and lo_eff > 0)
  double hi_eff = 0.0;  //          lambda_max <= hi_eff
  double lo_raw = 0.0;
  double hi_raw = 0.0;
};

struct Verdict {
  EigenExtremes e1, e2;
  bool ok = false;
  double violation = kInf;  // how far from certifying; 0-ish when ok
};

Verdict certify(const Eigen::MatrixXcd& V, const std::vector<int>& s1,
                const std::vector<int>& s2, const Targets& t) {
  Verdict v;
  v.e1 = eigen_extremes(part_operator(V, s1));
  v.e2 = eigen_extremes(part_operator(V, s2));
  const double worst_min = std::min(v.e1.lambda_min, v.e2.lambda_min);
  const double worst_max = std::max(v.e1.lambda_max, v.e2.lambda_max);
  v.ok = t.lo_eff > 0.0 && worst_min >= t.lo_eff && worst_max <= t.hi_eff;
  const double lo_gap = t.lo_eff > 0.0 && worst_min > 0.0 ? t.lo_eff / worst_min : kInf;
  const double hi_gap = t.hi_eff > 0.0 ? worst_max / t.hi_eff : kInf;
  v.violation = std::max({lo_gap, hi_gap, 1.0});
  return v;
}

std::vector<int> complement_of(int k, const std::vector<int>& s) {
  std::vector<bool> in(static_cast<std::size_t>(k), false);
  for (int i : s) in[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k) - s.size());
  for (int i = 0; i < k; ++i)
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

// Canonical order: the part containing index 0 is S1.
Partition make_partition(std::vector<int> s1, std::vector<int> s2, const Verdict& v) {
  Partition p;
  if (!s1.empty() && s1.front() == 0) {
    p.S1 = std::move(s1);
    p.S2 = std::move(s2);
    p.bounds1 = v.e1;
    p.bounds2 = v.e2;
  } else {
    p.S1 = std::move(s2);
    p.S2 = std::move(s1);
    p.bounds1 = v.e2;
    p.bounds2 = v.e1;
  }
  return p;
}

std::vector<int> random_balanced_half(int k, SplitMix64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  idx.resize(static_cast<std::size_t>(k / 2));
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Single-element moves descending max(lambda_max(W1), 1 - lambda_min(W1)) on
// the whitened part operator; terminates at a local minimum.
std::vector<int> greedy_descent(const Eigen::MatrixXcd& U, std::vector<int> s1) {
  const int k = static_cast<int>(U.cols());
  std::vector<bool> in(static_cast<std::size_t>(k), false);
  for (int i : s1) in[static_cast<std::size_t>(i)] = true;
  Eigen::MatrixXcd W1 = part_operator(U, s1);
  double cost = whitened_cost(W1);
  int size1 = static_cast<int>(s1.size());
  const int max_rounds = 4 * k;
  for (int round = 0; round < max_rounds; ++round) {
    int best_move = -1;
    double best_cost = cost - 1e-12;
    for (int i = 0; i < k; ++i) {
      const bool member = in[static_cast<std::size_t>(i)];
      if (member && size1 <= 1) continue;
      if (!member && size1 >= k - 1) continue;
      const double sgn = member ? -1.0 : 1.0;
      Eigen::MatrixXcd Wt = W1 + sgn * (U.col(i) * U.col(i).adjoint());
      const double c = whitened_cost(0.5 * (Wt + Wt.adjoint()).eval());
      if (c < best_cost) {
        best_cost = c;
        best_move = i;
      }
    }
    if (best_move < 0) break;
    const bool member = in[static_cast<std::size_t>(best_move)];
    const double sgn = member ? -1.0 : 1.0;
    W1 += sgn * (U.col(best_move) * U.col(best_move).adjoint());
    W1 = (0.5 * (W1 + W1.adjoint())).eval();
    in[static_cast<std::size_t>(best_move)] = !member;
    size1 += member ? -1 : 1;
    cost = best_cost;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size1));
  for (int i = 0; i < k; ++i)
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

[[noreturn]] void throw_no_partition(int k, const Targets& t, Partition best,
                                     const char* how) {
  std::ostringstream os;
  os << "partition search (" << how << ") over " << k
     << " vectors found no partition meeting lambda_min >= " << t.lo_eff
     << " and lambda_max <= " << t.hi_eff << " on both parts";
  if (t.lo_raw <= 0.0)
    os << " (lower target " << t.lo_raw << " is degenerate: alpha <= 25*delta_eff)";
  os << "; best found: |S1|=" << best.S1.size() << " bounds [" << best.bounds1.lambda_min
     << ", " << best.bounds1.lambda_max << "], |S2|=" << best.S2.size() << " bounds ["
     << best.bounds2.lambda_min << ", " << best.bounds2.lambda_max << "]";
  throw NoCertifiedPartition(os.str(), std::move(best));
}

struct AttemptOutcome {
  bool ok = false;
  double violation = kInf;
  std::vector<int> s1;
  Verdict verdict;
};

// Attempt-indexed searches (random restarts, greedy restarts) are evaluated in
// fixed-size batches; the accepted candidate is the lowest certified attempt
// index, so the result does not depend on the thread count.
template <typename MakeCandidate>
Partition attempt_search(const Eigen::MatrixXcd& V, const Targets& t, int max_attempts,
                         int threads, const char* how, MakeCandidate&& make_candidate) {
  const int k = static_cast<int>(V.cols());
  constexpr int kBatch = 32;
  std::optional<AttemptOutcome> best;  // least violation, then lowest attempt
  for (int base = 0; base < max_attempts; base += kBatch) {
    const int batch = std::min(kBatch, max_attempts - base);
    auto outcomes = parallel_map(static_cast<std::size_t>(batch), threads,
                                 [&](std::size_t b) -> AttemptOutcome {
                                   AttemptOutcome o;
                                   o.s1 = make_candidate(base + static_cast<int>(b));
                                   o.verdict =
                                       certify(V, o.s1, complement_of(k, o.s1), t);
                                   o.ok = o.verdict.ok;
                                   o.violation = o.verdict.violation;
                                   return o;
                                 });
    for (auto& o : outcomes) {
      if (o.ok)
        return make_partition(o.s1, complement_of(k, o.s1), o.verdict);
      if (!best || o.violation < best->violation) best = std::move(o);
    }
  }
  Partition bp = make_partition(best->s1, complement_of(k, best->s1), best->verdict);
  throw_no_partition(k, t, std::move(bp), how);
}

struct BlockBest {
  double cost = kInf;
  std::uint64_t mask = 0;
  bool certified = false;
  Verdict verdict;
};

std::vector<int> mask_to_part(std::uint64_t mask, int k) {
  std::vector<int> s1{0};  // index 0 pinned to S1: partitions are unordered
  for (int i = 1; i < k; ++i)
    if (mask & (1ull << (i - 1))) s1.push_back(i);
  return s1;
}

Partition exhaustive_search(const Eigen::MatrixXcd& V, const Eigen::MatrixXcd& U,
                            const Targets& t, int threads) {
  const int k = static_cast<int>(V.cols());
  if (k > 24)
    raise(Errc::invalid_argument,
          "exhaustive partition search limited to index sets of size <= 24");
  const std::uint64_t total = (1ull << (k - 1)) - 1;  // skip the empty-S2 mask
  const std::uint64_t n_blocks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t chunk = (total + n_blocks - 1) / n_blocks;

  auto blocks = parallel_map(
      static_cast<std::size_t>(n_blocks), threads, [&](std::size_t blk) -> BlockBest {
        BlockBest best;
        const std::uint64_t lo = blk * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          const auto s1 = mask_to_part(mask, k);
          const auto s2 = complement_of(k, s1);
          const double cost = whitened_cost(part_operator(U, s1));
          const Verdict v = certify(V, s1, s2, t);
          const bool better = v.ok == best.certified
                                  ? (cost < best.cost || (cost == best.cost && mask < best.mask))
                                  : v.ok;
          if (better) best = BlockBest{cost, mask, v.ok, v};
        }
        return best;
      });

  BlockBest best;
  for (const auto& b : blocks) {
    const bool better = b.certified == best.certified
                            ? (b.cost < best.cost || (b.cost == best.cost && b.mask < best.mask))
                            : b.certified;
    if (better) best = b;
  }
  const auto s1 = mask_to_part(best.mask, k);
  const auto s2 = complement_of(k, s1);
  Partition p = make_partition(s1, s2, best.verdict);
  if (!best.certified) throw_no_partition(k, t, std::move(p), "exhaustive");
  return p;
}

}  // namespace

Partition partition_step(const Eigen::MatrixXcd& vectors, double alpha, double beta,
                         const SelectionConfig& cfg, int threads) {
  const int k = static_cast<int>(vectors.cols());
  const int n = static_cast<int>(vectors.rows());
  if (n < 1 || k < 2)
    raise(Errc::invalid_argument, "partition needs at least two vectors of dim >= 1");
  if (!(alpha > 0.0) || !(beta >= alpha))
    raise(Errc::invalid_argument, "need 0 < alpha <= beta");
  if (cfg.max_attempts < 1) raise(Errc::invalid_argument, "max_attempts must be >= 1");
  if (!(cfg.slack >= 0.0)) raise(Errc::invalid_argument, "slack must be >= 0");

  const double delta_eff = vectors.colwise().squaredNorm().maxCoeff();
  if (!(delta_eff > 0.0)) raise(Errc::invalid_argument, "all input vectors are zero");

  Eigen::MatrixXcd M = vectors * vectors.adjoint();
  M = (0.5 * (M + M.adjoint())).eval();
  const EigenExtremes me = eigen_extremes(M);
  // The claimed (alpha, beta) must hold for the input operator, up to the same
  // slack the caller allows on the outputs.
  if (me.lambda_min < alpha * (1.0 - 1e-9) / (1.0 + cfg.slack) ||
      me.lambda_max > beta * (1.0 + 1e-9) * (1.0 + cfg.slack))
    raise(Errc::invalid_argument,
          "input operator bounds [" + std::to_string(me.lambda_min) + ", " +
              std::to_string(me.lambda_max) + "] violate the claimed (alpha, beta)");

  Targets t;
  const double g = 5.0 * std::sqrt(delta_eff / alpha);
  t.lo_raw = alpha * (1.0 - g) / 2.0;
  t.hi_raw = beta * (1.0 + g) / 2.0;
  t.lo_eff = t.lo_raw / (1.0 + cfg.slack);
  t.hi_eff = t.hi_raw * (1.0 + cfg.slack);

  switch (cfg.method) {
    case SelectionMethod::exhaustive: {
      const Eigen::MatrixXcd U = inverse_sqrt(M) * vectors;
      return exhaustive_search(vectors, U, t, threads);
    }
    case SelectionMethod::random_certified:
      return attempt_search(vectors, t, cfg.max_attempts, threads, "random_certified",
                            [&](int attempt) {
                              SplitMix64 rng = derived_rng(cfg.seed, attempt);
                              return random_balanced_half(k, rng);
                            });
    case SelectionMethod::greedy_swap: {
      const Eigen::MatrixXcd U = inverse_sqrt(M) * vectors;
      return attempt_search(vectors, t, cfg.max_attempts, threads, "greedy_swap",
                            [&](int attempt) {
                              SplitMix64 rng = derived_rng(cfg.seed, attempt);
                              return greedy_descent(U, random_balanced_half(k, rng));
                            });
    }
  }
  raise(Errc::invalid_argument, "unknown selection method");
}

std::pair<RowSelection, SelectionTrace> iterated_halving(int m, std::span<const int> cells,
                                                         const SelectionConfig& cfg,
                                                         int threads) {
  std::vector<int> I(cells.begin(), cells.end());
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  const int n = static_cast<int>(I.size());
  if (m < 1 || n < 1 || n > m) raise(Errc::invalid_argument, "need 1 <= |I| <= m");

  SelectionTrace trace;
  if (100 * n >= m) {
    // Dense regime: the full row set is already a tight certificate
    // (Gram = m * Identity), no halving needed.
    std::vector<int> full(static_cast<std::size_t>(m));
    std::iota(full.begin(), full.end(), 0);
    trace.final_J = full;
    return {RowSelection(std::move(full), m), std::move(trace)};
  }

  const double delta = static_cast<double>(n) / m;
  const HalvingSchedule sched = compute_schedule(delta);

  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  const Eigen::MatrixXcd B = fourier_submatrix(m, I, all);
  const Eigen::MatrixXcd V = B.adjoint() / std::sqrt(static_cast<double>(m));

  std::vector<int> cur = all;
  for (int level = 0; level <= sched.L; ++level) {
    Eigen::MatrixXcd Vcur(V.rows(), static_cast<Eigen::Index>(cur.size()));
    for (std::size_t i = 0; i < cur.size(); ++i)
      Vcur.col(static_cast<Eigen::Index>(i)) = V.col(cur[i]);

    SelectionConfig level_cfg = cfg;
    // Salt the seed per level so attempt streams do not overlap across levels.
    level_cfg.seed = cfg.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(level + 1));
    if (cfg.method == SelectionMethod::exhaustive && cur.size() > 24)
      level_cfg.method = SelectionMethod::random_certified;  // enumeration cap

    Partition p;
    try {
      p = partition_step(Vcur, sched.alphas[static_cast<std::size_t>(level)],
                         sched.betas[static_cast<std::size_t>(level)], level_cfg, threads);
    } catch (NoCertifiedPartition& e) {
      e.set_completed_steps(trace.steps);  // levels finished before the failure
      throw;
    }

    auto to_abs = [&](const std::vector<int>& local) {
      std::vector<int> abs;
      abs.reserve(local.size());
      for (int i : local) abs.push_back(cur[static_cast<std::size_t>(i)]);
      return abs;  // cur sorted and local sorted => abs sorted
    };
    std::vector<int> abs1 = to_abs(p.S1);
    std::vector<int> abs2 = to_abs(p.S2);

    const bool keep_first =
        abs1.size() != abs2.size()
            ? abs1.size() < abs2.size()
            : std::lexicographical_compare(abs1.begin(), abs1.end(), abs2.begin(), abs2.end());
    std::vector<int>& kept = keep_first ? abs1 : abs2;
    const EigenExtremes& kb = keep_first ? p.bounds1 : p.bounds2;

    trace.steps.push_back(SelectionStep{kept,
                                        sched.alphas[static_cast<std::size_t>(level + 1)],
                                        sched.betas[static_cast<std::size_t>(level + 1)],
                                        kb.lambda_min, kb.lambda_max});
    cur = kept;
  }
  trace.final_J = cur;
  return {RowSelection(std::move(cur), m), std::move(trace)};
}

namespace {

struct SubsetBest {
  double ratio = kInf;
  std::vector<int> subset;

  // Ratios within 1e-12 relative are ties (mathematically equal ratios differ
  // by ulps); ties prefer smaller subsets, then lexicographic order.
  bool improves(double r, const std::vector<int>& s) const {
    if (subset.empty()) return true;
    const bool both_inf = std::isinf(r) && std::isinf(ratio);
    if (!both_inf && std::abs(r - ratio) > 1e-12 * std::min(r, ratio)) return r < ratio;
    if (s.size() != subset.size()) return s.size() < subset.size();
    return std::lexicographical_compare(s.begin(), s.end(), subset.begin(), subset.end());
  }
};

void subset_dfs(const std::vector<Eigen::MatrixXcd>& rank1, int next, Eigen::MatrixXcd& G,
                std::vector<int>& subset, SubsetBest& best) {
  const int m = static_cast<int>(rank1.size());
  for (int j = next; j < m; ++j) {
    G += rank1[static_cast<std::size_t>(j)];
    subset.push_back(j);
    const Eigen::MatrixXcd S = 0.5 * (G + G.adjoint());
    const EigenExtremes e = eigen_extremes(S);
    const double ratio = e.lambda_min > 0.0 ? e.lambda_max / e.lambda_min : kInf;
    if (best.improves(ratio, subset)) best = SubsetBest{ratio, subset};
    subset_dfs(rank1, j + 1, G, subset, best);
    subset.pop_back();
    G -= rank1[static_cast<std::size_t>(j)];
  }
}

}  // namespace

SelectionResult select_rows(const GridSpectrum& grid, const SelectionConfig& cfg,
                            int threads) {
  const int m = grid.m();
  if (cfg.method == SelectionMethod::exhaustive && m <= 20) {
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 0);
    const Eigen::MatrixXcd B = fourier_submatrix(m, grid.cells(), all);
    std::vector<Eigen::MatrixXcd> rank1;
    rank1.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
      rank1.push_back(B.row(j).adjoint() * B.row(j));

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(grid.n(), grid.n());
    std::vector<int> subset;
    SubsetBest best;
    subset_dfs(rank1, 0, G, subset, best);

    RowSelection J(best.subset, m);
    SelectionTrace trace;
    trace.final_J = J.rows();
    return SelectionResult{J, frame_certificate(grid, J), std::move(trace)};
  }

  auto [J, trace] = iterated_halving(m, grid.cells(), cfg, threads);
  FrameCertificate cert = frame_certificate(grid, J);
  return SelectionResult{std::move(J), cert, std::move(trace)};
}

}  // namespace expframe
