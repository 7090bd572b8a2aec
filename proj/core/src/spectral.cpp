#include "symtoep/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace symtoep {
namespace {

double sorted_quantile(const RealVector& sorted, double q) {
  const Index n = sorted.size();
  Index idx = static_cast<Index>(std::ceil(q * static_cast<double>(n)));
  idx = std::clamp<Index>(idx, 1, n);
  return sorted[idx - 1];
}

}  // namespace

RealVector sym_eigs(const DenseMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("sym_eigs: matrix must be square");
  if (m.rows() == 0) throw std::invalid_argument("sym_eigs: empty matrix");
  if (!m.allFinite()) throw numeric_error("sym_eigs: non-finite entry");

  const double scale = m.cwiseAbs().maxCoeff();
  const double asym =
      (m - DenseMatrix(m.transpose())).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale)
    throw numeric_error("sym_eigs: asymmetry exceeds 1e-10 * max|entry|");

  const DenseMatrix sym = 0.5 * (m + DenseMatrix(m.transpose()));
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(sym,
                                                    Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numeric_error("sym_eigs: eigensolver did not converge");
  return solver.eigenvalues();
}

RealVector singular_values(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("singular_values: empty matrix");
  const bool tall = m.rows() >= m.cols();
  const DenseMatrix gram =
      tall ? DenseMatrix(m.transpose() * m) : DenseMatrix(m * m.transpose());
  RealVector eigs = sym_eigs(gram);
  for (Index i = 0; i < eigs.size(); ++i)
    eigs[i] = std::sqrt(std::max(eigs[i], 0.0));
  return eigs;
}

RealVector antidiag_block_eigs(const DenseMatrix& a) {
  const RealVector sv = singular_values(a);
  const Index padding = std::abs(a.rows() - a.cols());
  RealVector out(a.rows() + a.cols());
  Index at = 0;
  for (Index j = sv.size() - 1; j >= 0; --j) out[at++] = -sv[j];
  for (Index j = 0; j < padding; ++j) out[at++] = 0.0;
  for (Index j = 0; j < sv.size(); ++j) out[at++] = sv[j];
  std::sort(out.begin(), out.end());
  return out;
}

Inertia inertia(const RealVector& eigs, double zero_tol) {
  Inertia counts;
  for (Index i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs[i]) <= zero_tol)
      ++counts.zero;
    else if (eigs[i] > 0.0)
      ++counts.positive;
    else
      ++counts.negative;
  }
  return counts;
}

double default_inertia_tol(const RealVector& eigs) {
  return 1e-8 * eigs.norm();
}

SpectrumReport distribution_report(const RealVector& eigs,
                                   const RealVector& samples,
                                   double outlier_delta) {
  if (eigs.size() != samples.size())
    throw std::invalid_argument(
        "distribution_report: eigenvalue and sample lengths differ");
  if (eigs.size() == 0)
    throw std::invalid_argument("distribution_report: empty input");

  SpectrumReport report;
  report.n = eigs.size();
  report.eigenvalues = eigs;
  report.samples = samples;
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  std::sort(report.samples.begin(), report.samples.end());

  report.deviations =
      (report.eigenvalues - report.samples).cwiseAbs();
  report.outlier_threshold = outlier_delta;
  report.outlier_count =
      (report.deviations.array() > outlier_delta).count();

  RealVector sorted = report.deviations;
  std::sort(sorted.begin(), sorted.end());
  report.q50 = sorted_quantile(sorted, 0.50);
  report.q90 = sorted_quantile(sorted, 0.90);
  report.q99 = sorted_quantile(sorted, 0.99);
  report.max_deviation = sorted[sorted.size() - 1];
  report.inertia =
      inertia(report.eigenvalues, default_inertia_tol(report.eigenvalues));
  return report;
}

std::vector<WeylTestFunction> default_weyl_family(double lo, double hi,
                                                  int hat_count) {
  if (hat_count < 2)
    throw std::invalid_argument("default_weyl_family: need >= 2 hats");
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<WeylTestFunction> family;
  family.reserve(static_cast<std::size_t>(hat_count) + 2);
  const double width = (hi - lo) / static_cast<double>(hat_count - 1);
  for (int i = 0; i < hat_count; ++i) {
    const double center = lo + width * static_cast<double>(i);
    family.push_back(
        {"hat@" + std::to_string(center), [center, width](double x) {
           return std::max(0.0, 1.0 - std::abs(x - center) / width);
         }});
  }
  family.push_back({"id_clipped", [lo, hi](double x) {
                      return std::clamp(x, lo, hi);
                    }});
  family.push_back({"sq_clipped", [lo, hi](double x) {
                      const double c = std::clamp(x, lo, hi);
                      return c * c;
                    }});
  return family;
}

std::vector<double> weyl_test(const RealVector& eigs,
                              const RealVector& samples,
                              const std::vector<WeylTestFunction>& family) {
  if (eigs.size() == 0 || samples.size() == 0)
    throw std::invalid_argument("weyl_test: empty input");
  std::vector<double> out;
  out.reserve(family.size());
  for (const auto& test : family) {
    double mean_e = 0.0;
    for (Index i = 0; i < eigs.size(); ++i) mean_e += test.fn(eigs[i]);
    mean_e /= static_cast<double>(eigs.size());
    double mean_s = 0.0;
    for (Index i = 0; i < samples.size(); ++i) mean_s += test.fn(samples[i]);
    mean_s /= static_cast<double>(samples.size());
    out.push_back(std::abs(mean_e - mean_s));
  }
  return out;
}

std::vector<double> weyl_test(const RealVector& eigs,
                              const RealVector& samples) {
  if (eigs.size() == 0 || samples.size() == 0)
    throw std::invalid_argument("weyl_test: empty input");
  const double lo = std::min(eigs.minCoeff(), samples.minCoeff());
  const double hi = std::max(eigs.maxCoeff(), samples.maxCoeff());
  return weyl_test(eigs, samples, default_weyl_family(lo, hi));
}

SparselyVanishingProfile sv_profile(const RealVector& svs_ascending,
                                    const std::vector<double>& m_values) {
  if (svs_ascending.size() == 0)
    throw std::invalid_argument("sv_profile: empty singular value vector");
  SparselyVanishingProfile profile;
  profile.n = svs_ascending.size();
  profile.thresholds = m_values;
  profile.fractions.reserve(m_values.size());
  for (double m : m_values) {
    if (!(m > 0.0))
      throw std::invalid_argument("sv_profile: thresholds must be positive");
    const auto below = std::lower_bound(svs_ascending.begin(),
                                        svs_ascending.end(), 1.0 / m);
    profile.fractions.push_back(
        static_cast<double>(std::distance(svs_ascending.begin(), below)) /
        static_cast<double>(profile.n));
  }
  return profile;
}

}  // namespace symtoep
