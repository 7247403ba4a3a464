#pragma once

#include <optional>
#include <string>

#include "expframe/selection.hpp"

namespace expframe {

/// Resolved configuration of one CLI run. Everything that influences the
/// result is explicit here (and echoed into the output), so identical configs
/// reproduce identical artifacts byte for byte.
struct RunConfig {
  enum class Command { construct, certify, verify, density, schedule };
  enum class Format { json, csv };

  Command command = Command::construct;
  std::string input;             // path, or inline JSON when it starts with '{'
  std::optional<int> m;          // pin the grid order; otherwise double from 64
  double epsilon_cover = 0.01;   // relative excess tolerance of the cover search
  SelectionConfig selection;
  int count = 200;
  int K = 4;
  std::optional<double> R;       // sum truncation radius; default 50*m/d
  double tol = 0.02;
  double delta = 0.0;            // schedule subcommand
  std::optional<double> window;  // density window; default m/d
  std::string out;               // output path; empty writes to stdout
  Format format = Format::json;
  int threads = 1;               // resolved from EXPFRAME_THREADS
};

/// Executes one run. Exit codes: 0 pass, 1 input/config error,
/// 2 certification or verification failure. Diagnostics go to stderr.
int run(const RunConfig& cfg);

}  // namespace expframe
