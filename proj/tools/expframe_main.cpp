#include <cstdlib>
#include <string>

#include "CLI11.hpp"

#include "expframe/json_io.hpp"
#include "expframe/runner.hpp"

namespace {

int resolve_threads() {
  // The only environment knob: EXPFRAME_THREADS caps parallelism. Results are
  // identical for any value; this only trades wall time.
  const char* env = std::getenv("EXPFRAME_THREADS");
  if (!env) return 1;
  const int t = std::atoi(env);
  return t >= 1 ? t : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and certify exponential frames on grid spectra"};
  app.require_subcommand(1);

  expframe::RunConfig cfg;
  cfg.threads = resolve_threads();

  std::string method = "random_certified";
  std::string format = "json";
  int m_flag = 0;
  double r_flag = 0.0;
  double window_flag = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.selection.seed, "RNG seed, recorded in the output");
  };
  auto add_selection = [&](CLI::App* sub) {
    sub->add_option("--method", method, "exhaustive|random_certified|greedy_swap")
        ->check(CLI::IsMember({"exhaustive", "random_certified", "greedy_swap"}));
    sub->add_option("--max-attempts", cfg.selection.max_attempts,
                    "partition attempts per halving level");
    sub->add_option("--slack", cfg.selection.slack,
                    "multiplicative tolerance on partition targets");
  };
  auto add_verification = [&](CLI::App* sub) {
    sub->add_option("--count", cfg.count, "number of random trials");
    sub->add_option("--K", cfg.K, "per-cell trigonometric truncation order");
    sub->add_option("--R", r_flag, "frequency-sum truncation radius (default 50*m/d)");
    sub->add_option("--tol", cfg.tol, "relative tolerance on verified ratios");
  };

  auto* construct = app.add_subcommand(
      "construct", "spectrum -> normalized window -> grid cover -> certified row subset");
  construct->add_option("--input", cfg.input, "spectrum JSON (path or inline)")->required();
  construct->add_option("--m", m_flag, "pin the grid order (skip the doubling search)");
  construct->add_option("--epsilon-cover", cfg.epsilon_cover,
                        "relative excess tolerance of the cover search");
  add_selection(construct);
  add_common(construct);

  auto* certify = app.add_subcommand("certify", "exact certificate for a given (grid, J)");
  certify->add_option("--input", cfg.input, "JSON with \"grid\" and \"J\"")->required();
  add_common(certify);

  auto* verify = app.add_subcommand(
      "verify", "independent checks of a construction: sampling ratios, Rayleigh, witnesses");
  verify->add_option("--input", cfg.input, "construct output JSON")->required();
  add_verification(verify);
  add_common(verify);

  auto* density = app.add_subcommand("density", "sliding-window point counts and density checks");
  density->add_option("--input", cfg.input, "construct output JSON")->required();
  density->add_option("--window", window_flag, "window length (default: the period m/d)");
  add_common(density);

  auto* schedule = app.add_subcommand("schedule", "two-sided halving target table");
  schedule->add_option("--delta", cfg.delta, "density ratio in (0, 1/100)")->required();
  add_common(schedule);

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) cfg.command = expframe::RunConfig::Command::construct;
  if (certify->parsed()) cfg.command = expframe::RunConfig::Command::certify;
  if (verify->parsed()) cfg.command = expframe::RunConfig::Command::verify;
  if (density->parsed()) cfg.command = expframe::RunConfig::Command::density;
  if (schedule->parsed()) cfg.command = expframe::RunConfig::Command::schedule;

  try {
    cfg.selection.method = expframe::method_from_string(method);
  } catch (const expframe::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  cfg.format = format == "csv" ? expframe::RunConfig::Format::csv
                               : expframe::RunConfig::Format::json;
  if (m_flag > 0) cfg.m = m_flag;
  if (r_flag > 0.0) cfg.R = r_flag;
  if (window_flag > 0.0) cfg.window = window_flag;

  return expframe::run(cfg);
}
