#include "expframe/json_io.hpp"

#include "expframe/error.hpp"

namespace expframe {

ordered_json to_json(const IntervalUnion& u) {
  ordered_json arr = ordered_json::array();
  for (const auto& iv : u.intervals()) arr.push_back({iv.a, iv.b});
  return ordered_json{{"intervals", arr}};
}

ordered_json to_json(const GridSpectrum& g) {
  return ordered_json{{"m", g.m()}, {"I", g.cells()}, {"d", g.d()}};
}

ordered_json to_json(const FrameCertificate& c) {
  return ordered_json{{"lambda_min", c.lambda_min},
                      {"lambda_max", c.lambda_max},
                      {"a_sampling", c.a_sampling},
                      {"A_sampling", c.A_sampling},
                      {"a_frame", c.a_frame},
                      {"A_frame", c.A_frame},
                      {"normalized_lower", c.normalized_lower},
                      {"normalized_upper", c.normalized_upper},
                      {"is_frame", c.is_frame},
                      {"m", c.m},
                      {"n", c.n},
                      {"J_size", c.J_size},
                      {"d", c.d}};
}

ordered_json to_json(const SelectionTrace& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps)
    steps.push_back(ordered_json{{"chosen", s.chosen},
                                 {"alpha_target", s.alpha_target},
                                 {"beta_target", s.beta_target},
                                 {"achieved_min", s.achieved_min},
                                 {"achieved_max", s.achieved_max}});
  return ordered_json{{"steps", steps}, {"final_J", t.final_J}};
}

ordered_json to_json(const HalvingSchedule& s) {
  return ordered_json{{"delta", s.delta},
                      {"L", s.L},
                      {"alphas", s.alphas},
                      {"betas", s.betas},
                      {"C_product", s.C_product}};
}

ordered_json to_json(const MonteCarloReport& r) {
  return ordered_json{{"ratios", r.ratios},
                      {"min_ratio", r.min_ratio},
                      {"max_ratio", r.max_ratio},
                      {"certified", {r.certified_lo, r.certified_hi}},
                      {"tail_bound", r.tail_bound},
                      {"tol", r.tol},
                      {"count", r.count},
                      {"K", r.K},
                      {"R", r.R},
                      {"seed", r.seed},
                      {"pass", r.pass}};
}

ordered_json to_json(const DensityReport& r) {
  return ordered_json{{"window", r.window},
                      {"offsets", r.offsets},
                      {"counts", r.counts},
                      {"min_count", r.min_count},
                      {"max_count", r.max_count},
                      {"min_density", r.min_density},
                      {"max_density", r.max_density},
                      {"landau_floor", r.landau_floor},
                      {"window_is_period_multiple", r.window_is_period_multiple},
                      {"landau_ok", r.landau_ok},
                      {"j_size_ok", r.j_size_ok}};
}

SpectrumInput parse_spectrum(const ordered_json& j) {
  SpectrumInput in;
  if (j.contains("intervals")) {
    std::vector<Interval> raw;
    for (const auto& pair : j.at("intervals")) {
      if (!pair.is_array() || pair.size() != 2)
        raise(Errc::io_error, "each interval must be a [a, b] pair");
      raw.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    in.intervals = validate(std::move(raw));
    return in;
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    in.is_grid = true;
    in.grid_m = g.at("m").get<int>();
    in.grid_I = g.at("I").get<std::vector<int>>();
    in.grid_d = g.value("d", 1.0);
    return in;
  }
  raise(Errc::io_error, "spectrum JSON must contain \"intervals\" or \"grid\"");
}

GridSpectrum grid_from_json(const ordered_json& j) {
  const auto& g = j.contains("grid") ? j.at("grid") : j;
  return GridSpectrum(g.at("m").get<int>(), g.at("I").get<std::vector<int>>(),
                      g.value("d", 1.0));
}

std::vector<int> rows_from_json(const ordered_json& j) {
  if (!j.contains("J")) raise(Errc::io_error, "input JSON has no row selection \"J\"");
  return j.at("J").get<std::vector<int>>();
}

SelectionMethod method_from_string(const std::string& s) {
  if (s == "exhaustive") return SelectionMethod::exhaustive;
  if (s == "random_certified") return SelectionMethod::random_certified;
  if (s == "greedy_swap") return SelectionMethod::greedy_swap;
  raise(Errc::invalid_argument, "unknown selection method: " + s);
}

const char* method_to_string(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::exhaustive: return "exhaustive";
    case SelectionMethod::random_certified: return "random_certified";
    case SelectionMethod::greedy_swap: return "greedy_swap";
  }
  return "unknown";
}

ordered_json to_json(const SelectionConfig& cfg) {
  return ordered_json{{"method", method_to_string(cfg.method)},
                      {"seed", cfg.seed},
                      {"max_attempts", cfg.max_attempts},
                      {"slack", cfg.slack}};
}

SelectionConfig selection_config_from_json(const ordered_json& j) {
  SelectionConfig cfg;
  if (j.contains("method")) cfg.method = method_from_string(j.at("method").get<std::string>());
  cfg.seed = j.value("seed", cfg.seed);
  cfg.max_attempts = j.value("max_attempts", cfg.max_attempts);
  cfg.slack = j.value("slack", cfg.slack);
  return cfg;
}

}  // namespace expframe
