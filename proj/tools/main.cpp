#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "symtoep/types.hpp"

namespace {

using symtoep::cli::ExperimentConfig;

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad value in --n list: '" + item + "'");
    sizes.push_back(n);
  }
  if (sizes.empty()) throw std::invalid_argument("--n list is empty");
  for (int n : sizes)
    if (n < 2) throw std::invalid_argument("every n must be >= 2");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symtoep: spectra of symmetrized Toeplitz matrices and their "
      "circulant-preconditioned forms"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string n_list;
  std::string circulant = "strang";
  double delta = -1.0;  // negative means "use the symbol-relative default"

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--symbol", config.symbol_spec,
                    "built-in name (ex4.1 .. ex4.8) or symbol file path")
        ->required();
    sub->add_option("--n", n_list, "matrix size or comma-separated list")
        ->required();
    sub->add_option("--circulant", circulant, "circulant kind")
        ->check(CLI::IsMember({"strang", "chan"}));
    sub->add_option("--delta", delta,
                    "outlier threshold (default 0.05 * max grid |f|)");
    sub->add_option("--cluster-eps,--eps", config.cluster_eps,
                    "cluster radius around +-1");
    sub->add_option("--pinv-tol", config.pinv_tol,
                    "relative pseudo-inverse zero threshold");
    sub->add_option("--out", config.out_dir, "output directory");
    sub->add_flag("--plot", config.plot, "write an SVG scatter plot");
  };

  const std::pair<const char*, const char*> modes[] = {
      {"spectrum", "eigenvalues of Y T[f] against psi_{|f|} samples"},
      {"precond", "eigenvalues of |C|^{-1} Y T[f] with a +-1 cluster report"},
      {"pinv-sv", "singular values of C^+ T[f] against the constant 1"},
      {"block", "eigenvalues of (Y (x) I_s) T[f] for matrix-valued symbols"},
      {"inertia", "spectrum report focused on the inertia counts"},
      {"svprofile", "sparsely-vanishing profile of the singular values"},
  };
  for (const auto& [name, description] : modes) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub);
    sub->callback([&config, mode = std::string(name)] { config.mode = mode; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 1 = usage error
  }

  try {
    config.sizes = parse_sizes(n_list);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
  config.circulant = circulant == "chan" ? symtoep::CirculantKind::chan
                                         : symtoep::CirculantKind::strang;
  if (delta >= 0.0) config.outlier_delta = delta;

  try {
    return symtoep::cli::run_experiment(config);
  } catch (const symtoep::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
