#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "svg_plot.hpp"
#include "symtoep/builtins.hpp"
#include "symtoep/io.hpp"
#include "symtoep/precond.hpp"
#include "symtoep/spectral.hpp"

namespace symtoep::cli {
namespace {

namespace fs = std::filesystem;

AnySymbol resolve_symbol(const std::string& spec) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return builtin_symbol(spec);
  return load_symbol_file(spec);
}

const ScalarSymbol& require_scalar(const AnySymbol& symbol,
                                   const std::string& mode) {
  if (const auto* scalar = std::get_if<ScalarSymbol>(&symbol)) return *scalar;
  throw std::invalid_argument("mode '" + mode +
                              "' requires a scalar symbol, got matrix-valued");
}

const MatrixSymbol& require_matrix(const AnySymbol& symbol,
                                   const std::string& mode) {
  if (const auto* matrix = std::get_if<MatrixSymbol>(&symbol)) return *matrix;
  throw std::invalid_argument("mode '" + mode +
                              "' requires a matrix-valued symbol");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << content;
}

std::vector<double> to_std(const RealVector& v) {
  return std::vector<double>(v.begin(), v.end());
}

// drops the entry with the largest magnitude (ties resolved to the last)
std::vector<double> without_largest_magnitude(const RealVector& v) {
  if (v.size() <= 1) return {};
  Index worst = 0;
  for (Index i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) >= std::abs(v[worst])) worst = i;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(v.size()) - 1);
  for (Index i = 0; i < v.size(); ++i)
    if (i != worst) out.push_back(v[i]);
  return out;
}

struct RunArtifacts {
  std::string report_json;
  RealVector csv_left;
  RealVector csv_right;
  std::string plot_title;
  std::vector<PlotSeries> plot_series;
  std::string summary;
};

RunArtifacts run_single(const ExperimentConfig& config,
                        const AnySymbol& symbol, int n) {
  RunArtifacts artifacts;
  std::ostringstream summary;
  summary << "n=" << n;

  const auto spectrum_like = [&](const RealVector& eigs,
                                 const RealVector& samples,
                                 const std::string& what) {
    const double delta = config.outlier_delta.value_or(
        0.05 * samples.cwiseAbs().maxCoeff());
    const SpectrumReport report = distribution_report(eigs, samples, delta);
    artifacts.report_json = to_json(report);
    artifacts.csv_left = report.eigenvalues;
    artifacts.csv_right = report.samples;
    artifacts.plot_title = what + ", n=" + std::to_string(n);
    artifacts.plot_series = {
        {"eigenvalues", to_std(report.eigenvalues)},
        {"symbol samples", to_std(report.samples)}};
    summary << " outliers=" << report.outlier_count << " (delta=" << delta
            << ") q90=" << report.q90 << " max_dev=" << report.max_deviation
            << " inertia=(" << report.inertia.positive << ","
            << report.inertia.negative << "," << report.inertia.zero << ")";
  };

  if (config.mode == "spectrum" || config.mode == "inertia") {
    const ScalarSymbol& f = require_scalar(symbol, config.mode);
    const RealVector eigs = sym_eigs(flip_left(build_toeplitz(f, n)));
    spectrum_like(eigs, psi_samples(f, n), "symmetrized Toeplitz spectrum");
  } else if (config.mode == "block") {
    const MatrixSymbol& f = require_matrix(symbol, config.mode);
    const DenseMatrix flipped =
        flip_kron_left(build_block_toeplitz(f, n), f.block_size());
    spectrum_like(sym_eigs(flipped), psi_samples_block(f, n),
                  "block symmetrized spectrum");
  } else if (config.mode == "precond") {
    const ScalarSymbol& f = require_scalar(symbol, config.mode);
    const RealVector eigs =
        preconditioned_spectrum(f, n, config.circulant, config.pinv_tol);
    const ClusterReport report = cluster_report(eigs, config.cluster_eps);
    artifacts.report_json = to_json(report);

    RealVector sorted = eigs;
    std::sort(sorted.begin(), sorted.end());
    RealVector ones_samples =
        psi_samples(ScalarSymbol::trig_polynomial({{0, 1.0}}), n);
    std::sort(ones_samples.begin(), ones_samples.end());
    artifacts.csv_left = sorted;
    artifacts.csv_right = ones_samples;
    artifacts.plot_title =
        "preconditioned spectrum, n=" + std::to_string(n);
    // the largest-magnitude eigenvalue is dropped from the plot only
    artifacts.plot_series = {{"eigenvalues", without_largest_magnitude(sorted)},
                             {"psi_1 samples", to_std(ones_samples)}};
    summary << " near+1=" << report.count_near_plus1
            << " near-1=" << report.count_near_minus1
            << " outliers=" << report.outlier_count
            << " (eps=" << report.eps << ")";
  } else if (config.mode == "pinv-sv") {
    const ScalarSymbol& f = require_scalar(symbol, config.mode);
    const RealVector svs =
        pinv_times_toeplitz_svs(f, n, config.circulant, config.pinv_tol);
    const double delta = config.outlier_delta.value_or(0.05);
    const SpectrumReport report =
        distribution_report(svs, RealVector::Ones(n), delta);
    artifacts.report_json = to_json(report);
    artifacts.csv_left = report.eigenvalues;
    artifacts.csv_right = report.samples;
    artifacts.plot_title =
        "singular values of C+T, n=" + std::to_string(n);
    artifacts.plot_series = {{"singular values", to_std(report.eigenvalues)},
                             {"target 1", to_std(report.samples)}};
    summary << " within_delta=" << (report.n - report.outlier_count) << "/"
            << report.n << " (delta=" << delta << ")";
  } else if (config.mode == "svprofile") {
    const ScalarSymbol& f = require_scalar(symbol, config.mode);
    const RealVector svs = singular_values(build_toeplitz(f, n));
    std::vector<double> thresholds;
    for (double m = 1.0; m <= 1024.0; m *= 2.0) thresholds.push_back(m);
    const SparselyVanishingProfile profile = sv_profile(svs, thresholds);
    artifacts.report_json = to_json(profile);
    artifacts.csv_left = Eigen::Map<const RealVector>(
        profile.thresholds.data(), static_cast<Index>(profile.thresholds.size()));
    artifacts.csv_right = Eigen::Map<const RealVector>(
        profile.fractions.data(), static_cast<Index>(profile.fractions.size()));
    artifacts.plot_title =
        "singular values (sparsely-vanishing profile), n=" +
        std::to_string(n);
    artifacts.plot_series = {{"singular values", to_std(svs)}};
    summary << " r(M=16)="
            << profile.fractions[std::min<std::size_t>(4, profile.fractions.size() - 1)];
  } else {
    throw std::invalid_argument("unknown mode: " + config.mode);
  }

  artifacts.summary = summary.str();
  return artifacts;
}

unsigned thread_cap(std::size_t jobs) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYMTOEP_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) cap = static_cast<unsigned>(parsed);
  }
  return std::min<unsigned>(cap, static_cast<unsigned>(jobs));
}

}  // namespace

int run_experiment(const ExperimentConfig& config) {
  AnySymbol symbol = builtin_symbol("ex4.1");
  try {
    symbol = resolve_symbol(config.symbol_spec);
    fs::create_directories(config.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  struct Slot {
    std::string summary;
    std::string error;
    int code = 0;
  };
  std::vector<Slot> slots(config.sizes.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.sizes.size()) return;
      const int n = config.sizes[i];
      try {
        const RunArtifacts artifacts = run_single(config, symbol, n);
        const fs::path base(config.out_dir);
        const std::string tag = "_n" + std::to_string(n);
        write_file(base / ("report" + tag + ".json"),
                   artifacts.report_json + "\n");
        {
          std::ostringstream csv;
          write_pairs_csv(csv, artifacts.csv_left, artifacts.csv_right);
          write_file(base / ("data" + tag + ".csv"), csv.str());
        }
        if (config.plot) {
          std::ostringstream svg;
          write_scatter_svg(svg, artifacts.plot_title, artifacts.plot_series);
          write_file(base / ("plot" + tag + ".svg"), svg.str());
        }
        slots[i].summary = artifacts.summary;
      } catch (const singular_preconditioner_error& e) {
        slots[i] = {"", e.what(), 3};
      } catch (const numeric_error& e) {
        slots[i] = {"", e.what(), 3};
      } catch (const std::invalid_argument& e) {
        slots[i] = {"", e.what(), 2};
      } catch (const std::exception& e) {
        slots[i] = {"", e.what(), 2};
      }
    }
  };

  const unsigned threads = thread_cap(config.sizes.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int exit_code = 0;
  for (const auto& slot : slots) {
    if (slot.code == 0) {
      std::cout << slot.summary << '\n';
    } else {
      std::cerr << "error: " << slot.error << '\n';
      exit_code = std::max(exit_code, slot.code);
    }
  }
  return exit_code;
}

}  // namespace symtoep::cli
