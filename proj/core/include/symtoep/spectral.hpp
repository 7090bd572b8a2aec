#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symtoep/types.hpp"

namespace symtoep {

/// Eigenvalues of a real symmetric matrix, ascending. The input may deviate
/// from exact symmetry by at most 1e-10 * max|entry|; within that band it is
/// symmetrized as (M + M^T)/2, beyond it a numeric_error is thrown. Solver
/// failure raises instead of returning a partial spectrum.
RealVector sym_eigs(const DenseMatrix& m);

/// Singular values of M (any shape), ascending: square roots of the Gram
/// eigenvalues with negative round-off clamped to zero. Returns
/// min(rows, cols) values.
RealVector singular_values(const DenseMatrix& m);

/// Eigenvalues of the symmetric 2x2 block matrix [[0, A], [A^T, 0]] computed
/// by the constructive route: the multiset {+sigma_j(A)} u {-sigma_j(A)} plus
/// |rows - cols| zeros, never forming the block matrix itself. Ascending,
/// length rows + cols.
RealVector antidiag_block_eigs(const DenseMatrix& a);

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;

  bool operator==(const Inertia&) const = default;
};

/// Signature of a spectrum: eigenvalues with |lambda| <= zero_tol count as
/// zero.
Inertia inertia(const RealVector& eigs, double zero_tol);

/// The default zero tolerance 1e-8 * ||eigs||_2; for a symmetric matrix this
/// equals 1e-8 * ||M||_F.
double default_inertia_tol(const RealVector& eigs);

/// Sorted eigenvalue / symbol-sample comparison. Both vectors are sorted
/// ascending and paired by index; the quantile at level q is the
/// ceil(q*n)-th smallest deviation.
struct SpectrumReport {
  Index n = 0;
  RealVector eigenvalues;  // ascending
  RealVector samples;      // ascending, same length
  RealVector deviations;   // |eigenvalues[j] - samples[j]|
  double outlier_threshold = 0.0;
  Index outlier_count = 0;
  double q50 = 0.0;
  double q90 = 0.0;
  double q99 = 0.0;
  double max_deviation = 0.0;
  Inertia inertia;
};

SpectrumReport distribution_report(const RealVector& eigs,
                                   const RealVector& samples,
                                   double outlier_delta);

struct WeylTestFunction {
  std::string name;
  std::function<double(double)> fn;
};

/// The fixed test-function family: hat functions max(0, 1 - |x-c|/w) on an
/// evenly spaced grid of centers over [lo, hi], plus x -> x and x -> x^2
/// clipped to [lo, hi].
std::vector<WeylTestFunction> default_weyl_family(double lo, double hi,
                                                  int hat_count = 21);

/// Per test function F: | mean F(eigs) - mean F(samples) |.
std::vector<double> weyl_test(const RealVector& eigs,
                              const RealVector& samples,
                              const std::vector<WeylTestFunction>& family);

/// Convenience overload over the default family built from the combined data
/// range.
std::vector<double> weyl_test(const RealVector& eigs,
                              const RealVector& samples);

/// Fraction of singular values below 1/M for each threshold M; the
/// finite-n rendering of the sparsely-vanishing diagnostic.
struct SparselyVanishingProfile {
  Index n = 0;
  std::vector<double> thresholds;  // the M values, increasing
  std::vector<double> fractions;   // #{i : sigma_i < 1/M} / n
};

SparselyVanishingProfile sv_profile(const RealVector& svs_ascending,
                                    const std::vector<double>& m_values);

}  // namespace symtoep
