#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtoep/structured.hpp"

namespace symtoep::cli {

struct ExperimentConfig {
  std::string symbol_spec;  // built-in name (ex4.1 .. ex4.8) or file path
  std::vector<int> sizes;   // the n list, each >= 2
  std::string mode;  // spectrum | precond | pinv-sv | block | inertia | svprofile
  CirculantKind circulant = CirculantKind::strang;
  std::optional<double> outlier_delta;  // default: 0.05 * max grid |f|
  double cluster_eps = 0.01;
  double pinv_tol = 1e-10;
  std::string out_dir = "out";
  bool plot = false;
};

/// Runs the experiment for every n in the list (in parallel, capped by
/// SYMTOEP_THREADS) and writes report_n*.json, data_n*.csv and optionally
/// plot_n*.svg into the output directory. Returns the process exit code:
/// 0 success, 2 input error, 3 numeric error.
int run_experiment(const ExperimentConfig& config);

}  // namespace symtoep::cli
