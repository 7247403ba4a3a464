#include "expframe/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "expframe/json_io.hpp"
#include "expframe/verification.hpp"

namespace expframe {

namespace {

ordered_json load_input(const std::string& input) {
  if (input.empty()) raise(Errc::io_error, "no input given (--input)");
  if (!input.empty() && input.front() == '{') return ordered_json::parse(input);
  std::ifstream f(input);
  if (!f) raise(Errc::io_error, "cannot open input file: " + input);
  ordered_json j;
  f >> j;
  return j;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) raise(Errc::io_error, "cannot open output file: " + cfg.out);
  f << text;
}

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::construct: return "construct";
    case RunConfig::Command::certify: return "certify";
    case RunConfig::Command::verify: return "verify";
    case RunConfig::Command::density: return "density";
    case RunConfig::Command::schedule: return "schedule";
  }
  return "unknown";
}

ordered_json resolved_config(const RunConfig& cfg) {
  ordered_json j{{"command", command_name(cfg.command)},
                 {"input", cfg.input},
                 {"selection", to_json(cfg.selection)},
                 {"seed", cfg.selection.seed},
                 {"epsilon_cover", cfg.epsilon_cover},
                 {"count", cfg.count},
                 {"K", cfg.K},
                 {"tol", cfg.tol},
                 {"threads", cfg.threads},
                 {"format", cfg.format == RunConfig::Format::csv ? "csv" : "json"}};
  j["m"] = cfg.m ? ordered_json(*cfg.m) : ordered_json(nullptr);
  j["R"] = cfg.R ? ordered_json(*cfg.R) : ordered_json(nullptr);
  j["window"] = cfg.window ? ordered_json(*cfg.window) : ordered_json(nullptr);
  if (cfg.command == RunConfig::Command::schedule) j["delta"] = cfg.delta;
  return j;
}

ordered_json lambda_description(const RowSelection& J, double d) {
  const FrequencySet freq(J, d);
  ordered_json sample = ordered_json::array();
  for (double l : freq.enumerate(0.0, 2.0 * freq.period())) sample.push_back(l);
  return ordered_json{{"J", J.rows()},
                      {"modulus", J.modulus()},
                      {"d", d},
                      {"period", freq.period()},
                      {"separation", freq.separation()},
                      {"sample", sample}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_construct(const RunConfig& cfg) {
  const ordered_json in = load_input(cfg.input);
  const SpectrumInput spec = parse_spectrum(in);

  double shift = 0.0;
  double excess = 0.0;
  std::optional<GridSpectrum> grid;
  if (spec.is_grid) {
    grid.emplace(spec.grid_m, spec.grid_I, spec.grid_d);
  } else {
    const NormalizedSpectrum norm = normalize_to_window(spec.intervals);
    shift = norm.shift;
    GridCover cover = cfg.m ? grid_cover(norm.set, norm.d, *cfg.m)
                            : auto_grid_cover(norm.set, norm.d, cfg.epsilon_cover);
    excess = cover.excess;
    grid.emplace(std::move(cover.grid));
  }

  const SelectionResult sel = select_rows(*grid, cfg.selection, cfg.threads);

  ordered_json out{{"schema_version", 1},
                   {"config", resolved_config(cfg)},
                   {"shift", shift},
                   {"excess", excess},
                   {"grid", to_json(*grid)},
                   {"J", sel.J.rows()},
                   {"lambda", lambda_description(sel.J, grid->d())},
                   {"certificate", to_json(sel.certificate)},
                   {"trace", to_json(sel.trace)}};
  write_output(cfg, dump(out));
  if (!sel.certificate.is_frame) {
    std::cerr << "certificate stage: lambda_min = 0, selected rows do not frame the set\n";
    return 2;
  }
  return 0;
}

int run_certify(const RunConfig& cfg) {
  const ordered_json in = load_input(cfg.input);
  const GridSpectrum grid = grid_from_json(in);
  const RowSelection J(rows_from_json(in), grid.m());
  const FrameCertificate cert = frame_certificate(grid, J);

  if (cfg.format == RunConfig::Format::csv) {
    const Eigen::VectorXd spectrum = gram_spectrum(grid, J);
    std::ostringstream os;
    os.precision(17);
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) os << spectrum(i) << "\n";
    write_output(cfg, os.str());
  } else {
    ordered_json out{{"schema_version", 1},
                     {"config", resolved_config(cfg)},
                     {"grid", to_json(grid)},
                     {"J", J.rows()},
                     {"certificate", to_json(cert)}};
    write_output(cfg, dump(out));
  }
  if (!cert.is_frame) {
    std::cerr << "certificate stage: lambda_min = 0, not a frame\n";
    return 2;
  }
  return 0;
}

int run_verify(const RunConfig& cfg) {
  const ordered_json in = load_input(cfg.input);
  const GridSpectrum grid = grid_from_json(in);
  const RowSelection J(rows_from_json(in), grid.m());
  const FrameCertificate cert = frame_certificate(grid, J);

  const double R = cfg.R ? *cfg.R : 50.0 * grid.m() / grid.d();
  const MonteCarloReport mc = pw_monte_carlo(grid, J, cfg.count, cfg.K, R,
                                             cfg.selection.seed, cfg.tol, cfg.threads);

  // Distinct sub-stream for the Rayleigh draws.
  const std::vector<double> ray =
      rayleigh_samples(grid, J, cfg.count, cfg.selection.seed ^ 0xA3C59AC2ull);
  double ray_min = ray.front(), ray_max = ray.front();
  for (double v : ray) {
    ray_min = std::min(ray_min, v);
    ray_max = std::max(ray_max, v);
  }
  const double eig_tol = 1e-9 * grid.m();
  const bool ray_ok = ray_min >= cert.lambda_min - eig_tol && ray_max <= cert.lambda_max + eig_tol;

  const Witness wmin = extremal_witness(grid, J, ExtremeSide::min);
  const Witness wmax = extremal_witness(grid, J, ExtremeSide::max);
  const double wit_tol = 1e-9 * std::max(1.0, cert.lambda_max);
  const bool wit_ok = std::abs(wmin.value - cert.lambda_min) <= wit_tol &&
                      std::abs(wmax.value - cert.lambda_max) <= wit_tol;

  const bool pass = mc.pass && ray_ok && wit_ok;
  ordered_json out{{"schema_version", 1},
                   {"config", resolved_config(cfg)},
                   {"grid", to_json(grid)},
                   {"J", J.rows()},
                   {"certificate", to_json(cert)},
                   {"monte_carlo", to_json(mc)},
                   {"rayleigh", ordered_json{{"min", ray_min}, {"max", ray_max}, {"ok", ray_ok}}},
                   {"witness", ordered_json{{"min_value", wmin.value},
                                            {"max_value", wmax.value},
                                            {"ok", wit_ok}}},
                   {"pass", pass}};
  write_output(cfg, dump(out));
  if (!pass) {
    std::cerr << "verification stage failed (monte_carlo=" << mc.pass << " rayleigh=" << ray_ok
              << " witness=" << wit_ok << ")\n";
    return 2;
  }
  return 0;
}

int run_density(const RunConfig& cfg) {
  const ordered_json in = load_input(cfg.input);
  const GridSpectrum grid = grid_from_json(in);
  const RowSelection J(rows_from_json(in), grid.m());
  const FrameCertificate cert = frame_certificate(grid, J);
  const FrequencySet freq(J, grid.d());

  const double window = cfg.window ? *cfg.window : freq.period();
  const double scan_end = 40.0 * window;
  const DensityReport rep = density_report(freq, grid.measure(), window, 0.0, scan_end);

  const IndicatorWindow iw = indicator_window(grid);
  long long eta_max_count = 0;
  for (double t = 0.0; t + iw.eta <= scan_end; t += 0.25 * iw.eta)
    eta_max_count = std::max(eta_max_count, freq.count_in(t, t + iw.eta));
  const double eta_bound = 9.0 * cert.A_frame / grid.measure();
  const bool eta_ok = static_cast<double>(eta_max_count) <= eta_bound;

  const bool pass = rep.landau_ok && rep.j_size_ok && eta_ok;
  if (cfg.format == RunConfig::Format::csv) {
    std::ostringstream os;
    os.precision(17);
    os << "offset,count\n";
    for (std::size_t i = 0; i < rep.offsets.size(); ++i)
      os << rep.offsets[i] << "," << rep.counts[i] << "\n";
    write_output(cfg, os.str());
  } else {
    ordered_json out{{"schema_version", 1},
                     {"config", resolved_config(cfg)},
                     {"grid", to_json(grid)},
                     {"J", J.rows()},
                     {"density", to_json(rep)},
                     {"eta", iw.eta},
                     {"h0", iw.h0},
                     {"eta_window_max_count", eta_max_count},
                     {"eta_count_bound", eta_bound},
                     {"eta_ok", eta_ok},
                     {"pass", pass}};
    write_output(cfg, dump(out));
  }
  if (!pass) {
    std::cerr << "density stage failed (landau=" << rep.landau_ok << " j_size=" << rep.j_size_ok
              << " eta=" << eta_ok << ")\n";
    return 2;
  }
  return 0;
}

int run_schedule(const RunConfig& cfg) {
  const HalvingSchedule s = compute_schedule(cfg.delta);
  if (cfg.format == RunConfig::Format::csv) {
    std::ostringstream os;
    os.precision(17);
    os << "# delta=" << s.delta << " L=" << s.L << " C_product=" << s.C_product << "\n";
    os << "j,alpha,beta\n";
    for (std::size_t j = 0; j < s.alphas.size(); ++j)
      os << j << "," << s.alphas[j] << "," << s.betas[j] << "\n";
    write_output(cfg, os.str());
  } else {
    ordered_json out{{"schema_version", 1},
                     {"config", resolved_config(cfg)},
                     {"schedule", to_json(s)}};
    write_output(cfg, dump(out));
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::construct: return run_construct(cfg);
      case RunConfig::Command::certify: return run_certify(cfg);
      case RunConfig::Command::verify: return run_verify(cfg);
      case RunConfig::Command::density: return run_density(cfg);
      case RunConfig::Command::schedule: return run_schedule(cfg);
    }
    std::cerr << "unknown command\n";
    return 1;
  } catch (const NoCertifiedPartition& e) {
    std::cerr << "selection stage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace expframe
