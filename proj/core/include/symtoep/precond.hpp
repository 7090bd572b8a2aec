#pragma once

#include <vector>

#include "symtoep/spectral.hpp"
#include "symtoep/structured.hpp"
#include "symtoep/types.hpp"

namespace symtoep {

/// Relative threshold below which circulant eigenvalues are treated as zero
/// in the pseudo-inverse branches.
inline constexpr double kDefaultPinvTol = 1e-10;

/// Eigenvalues of |C| = F |Lambda| F^*: the moduli of the circulant
/// eigenvalues, index-aligned with the Fourier basis (not sorted).
RealVector abs_circulant_eigs(const CirculantSpec& c);

enum class Side { left, right };

/// Applies |C|^{-1/2} (pseudo-inverse variant) to X from the requested side:
/// F diag(d_k) F^* with d_k = |lambda_k|^{-1/2} where
/// |lambda_k| > zero_tol * max|lambda| and d_k = 0 otherwise, evaluated per
/// column as forward DFT, diagonal scaling, inverse DFT. Real input yields
/// real output; the imaginary residue is checked against 1e-10 * ||X||_F and
/// discarded. Throws singular_preconditioner_error when every |lambda_k|
/// falls below the threshold.
DenseMatrix apply_abs_inv_sqrt(const CirculantSpec& c, const DenseMatrix& x,
                               double zero_tol = kDefaultPinvTol,
                               Side side = Side::left);

/// C^+ X: the Moore-Penrose pseudo-inverse of the circulant applied through
/// the Fourier diagonalization, d_k = 1/lambda_k gated by the same relative
/// threshold. The imaginary residue is checked against 1e-9 relative to the
/// larger of input and output norms (the pseudo-inverse amplifies round-off
/// by the reciprocal of the smallest kept eigenvalue modulus).
DenseMatrix apply_circulant_pinv(const CirculantSpec& c, const DenseMatrix& x,
                                 double zero_tol = kDefaultPinvTol);

/// Eigenvalues of |C_n|^{-1} Y_n T_n[f], ascending, computed through the
/// similar symmetric form S = |C|^{-1/2} (Y T) |C|^{-1/2} so that everything
/// stays inside the real symmetric eigensolver.
RealVector preconditioned_spectrum(const ScalarSymbol& sym, int n,
                                   CirculantKind kind,
                                   double pinv_tol = kDefaultPinvTol);

/// Singular values of C^+ T_n[f], ascending.
RealVector pinv_times_toeplitz_svs(const ScalarSymbol& sym, int n,
                                   CirculantKind kind,
                                   double pinv_tol = kDefaultPinvTol);

/// Counts of eigenvalues inside (1-eps, 1+eps) and (-1-eps, -1+eps); whatever
/// falls in neither window is an outlier and its value is recorded.
struct ClusterReport {
  Index n = 0;
  double eps = 0.0;
  Index count_near_plus1 = 0;
  Index count_near_minus1 = 0;
  Index outlier_count = 0;
  std::vector<double> outliers;
};

ClusterReport cluster_report(const RealVector& eigs, double eps);

}  // namespace symtoep
