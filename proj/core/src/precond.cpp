#include "symtoep/precond.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "symtoep/transforms.hpp"

namespace symtoep {
namespace {

using cd = std::complex<double>;

// F diag(d) F^* applied to every column of x. With the project's transform
// conventions this is column -> dft(d .* idft(column)).
ComplexMatrix apply_fourier_diagonal(const ComplexVector& d,
                                     const DenseMatrix& x) {
  ComplexMatrix out(x.rows(), x.cols());
  ComplexVector column(x.rows());
  for (Index j = 0; j < x.cols(); ++j) {
    column = x.col(j).cast<cd>();
    ComplexVector hat = dft(column, /*inverse=*/true);
    hat.array() *= d.array();
    out.col(j) = dft(hat, /*inverse=*/false);
  }
  return out;
}

DenseMatrix realified(const ComplexMatrix& z, double scale, double rel_tol,
                      const char* what) {
  const double residue = z.imag().norm();
  if (residue > rel_tol * scale)
    throw numeric_error(std::string(what) +
                        ": imaginary residue above tolerance");
  return z.real();
}

ComplexVector gated_scalings(const CirculantSpec& c, double zero_tol,
                             bool inverse_sqrt, const char* what) {
  const RealVector moduli = abs_circulant_eigs(c);
  const double max_mod = moduli.maxCoeff();
  const double cutoff = zero_tol * max_mod;
  ComplexVector d(c.n);
  Index live = 0;
  for (Index k = 0; k < c.n; ++k) {
    if (moduli[k] > cutoff) {
      d[k] = inverse_sqrt ? cd(1.0 / std::sqrt(moduli[k]), 0.0)
                          : cd(1.0, 0.0) / c.eigs[k];
      ++live;
    } else {
      d[k] = cd(0.0, 0.0);
    }
  }
  if (live == 0)
    throw singular_preconditioner_error(
        std::string(what) +
        ": every circulant eigenvalue is below the zero threshold");
  return d;
}

}  // namespace

RealVector abs_circulant_eigs(const CirculantSpec& c) {
  if (c.n == 0)
    throw std::invalid_argument("abs_circulant_eigs: empty circulant");
  return c.eigs.cwiseAbs();
}

DenseMatrix apply_abs_inv_sqrt(const CirculantSpec& c, const DenseMatrix& x,
                               double zero_tol, Side side) {
  const Index along = side == Side::left ? x.rows() : x.cols();
  if (along != c.n)
    throw std::invalid_argument(
        "apply_abs_inv_sqrt: matrix extent does not match circulant size");
  const ComplexVector d =
      gated_scalings(c, zero_tol, /*inverse_sqrt=*/true, "apply_abs_inv_sqrt");
  if (side == Side::left)
    return realified(apply_fourier_diagonal(d, x), x.norm(), 1e-10,
                     "apply_abs_inv_sqrt");
  // |C|^{-1/2} is real symmetric, so X |C|^{-1/2} = (|C|^{-1/2} X^T)^T.
  const DenseMatrix xt = x.transpose();
  const DenseMatrix yt = realified(apply_fourier_diagonal(d, xt), x.norm(),
                                   1e-10, "apply_abs_inv_sqrt");
  return yt.transpose();
}

DenseMatrix apply_circulant_pinv(const CirculantSpec& c, const DenseMatrix& x,
                                 double zero_tol) {
  if (x.rows() != c.n)
    throw std::invalid_argument(
        "apply_circulant_pinv: row count does not match circulant size");
  const ComplexVector d = gated_scalings(c, zero_tol, /*inverse_sqrt=*/false,
                                         "apply_circulant_pinv");
  const ComplexMatrix y = apply_fourier_diagonal(d, x);
  // C^+ amplifies by 1/|lambda|_min, so the round-off residue scales with
  // the output, not the input; near-singular circulants sit around 1e-10
  // relative, hence the looser band here.
  return realified(y, std::max(x.norm(), y.norm()), 1e-9,
                   "apply_circulant_pinv");
}

RealVector preconditioned_spectrum(const ScalarSymbol& sym, int n,
                                   CirculantKind kind, double pinv_tol) {
  const DenseMatrix yt = flip_left(build_toeplitz(sym, n));
  const CirculantSpec c = circulant_column(sym, n, kind);
  const DenseMatrix half = apply_abs_inv_sqrt(c, yt, pinv_tol, Side::right);
  const DenseMatrix s = apply_abs_inv_sqrt(c, half, pinv_tol, Side::left);
  return sym_eigs(s);
}

RealVector pinv_times_toeplitz_svs(const ScalarSymbol& sym, int n,
                                   CirculantKind kind, double pinv_tol) {
  const DenseMatrix t = build_toeplitz(sym, n);
  const CirculantSpec c = circulant_column(sym, n, kind);
  return singular_values(apply_circulant_pinv(c, t, pinv_tol));
}

ClusterReport cluster_report(const RealVector& eigs, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("cluster_report: eps must be positive");
  ClusterReport report;
  report.n = eigs.size();
  report.eps = eps;
  for (Index i = 0; i < eigs.size(); ++i) {
    const double v = eigs[i];
    if (std::abs(v - 1.0) < eps)
      ++report.count_near_plus1;
    else if (std::abs(v + 1.0) < eps)
      ++report.count_near_minus1;
    else
      report.outliers.push_back(v);
  }
  report.outlier_count = static_cast<Index>(report.outliers.size());
  return report;
}

}  // namespace symtoep
