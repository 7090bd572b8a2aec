#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "symtoep/types.hpp"

namespace symtoep {

/// Reduces theta into the principal period [-pi, pi). Both seam points map to
/// -pi, where evaluation uses the left limit at +pi.
double reduce_to_principal(double theta);

/// A generating function f(theta) ~ sum_k a_k e^{i*k*theta} with real Fourier
/// coefficients, from one of three families:
///
///  * TrigPolynomial   — finite coefficient table k -> a_k.
///  * ClosedFormSeries — exact coefficient rule plus a pointwise evaluator
///                       on [-pi, pi) (e.g. f(theta) = theta^2).
///  * PiecewiseConstant — breakpoints -pi = b_0 < ... < b_m = pi with one
///                       value per interval; coefficients come from the exact
///                       per-interval integral, never from quadrature.
///
/// Symbols are immutable after construction and cheap to copy.
class ScalarSymbol {
 public:
  enum class Kind { trig_polynomial, closed_form_series, piecewise_constant };

  static ScalarSymbol trig_polynomial(const std::map<int, double>& coeffs);
  static ScalarSymbol theta_squared();
  static ScalarSymbol closed_form(std::function<double(int)> coefficient_rule,
                                  std::function<double(double)> evaluator,
                                  std::string label);
  static ScalarSymbol piecewise_constant(std::vector<double> breakpoints,
                                         std::vector<double> values);

  Kind kind() const;

  /// a_k = (1/2pi) * integral of f(theta) e^{-i*k*theta} dtheta, exact for
  /// every supported family. Total over all k.
  double fourier_coefficient(int k) const;

  /// Pointwise value after periodic reduction of the argument.
  std::complex<double> evaluate(double theta) const;

  /// |f(theta)|.
  double abs_value(double theta) const { return std::abs(evaluate(theta)); }

  ScalarSymbol negated() const;

  // Family-specific accessors (throw std::logic_error on kind mismatch);
  // used by the structured builders and the symbol-file writer.
  const std::map<int, double>& coefficients() const;
  const std::vector<double>& breakpoints() const;
  const std::vector<double>& values() const;
  const std::string& label() const;

 private:
  struct TrigPolynomial {
    std::map<int, double> coeffs;  // nonzero entries only
  };
  struct ClosedFormSeries {
    std::function<double(int)> coefficient;
    std::function<double(double)> evaluate;  // receives the reduced argument
    std::string label;
  };
  struct PiecewiseConstant {
    std::vector<double> breaks;  // -pi = b_0 < ... < b_m = pi
    std::vector<double> values;  // one per interval
  };

  using Impl =
      std::variant<TrigPolynomial, ClosedFormSeries, PiecewiseConstant>;
  explicit ScalarSymbol(Impl impl) : impl_(std::move(impl)) {}

  Impl impl_;
};

/// An s x s matrix-valued symbol assembled from per-entry scalar symbols.
/// The Fourier coefficient matrices A_k = [a_k(f_jl)] must be symmetric
/// (Hermitian with real scalar coefficients); build_block_toeplitz validates
/// the coefficients it actually uses.
class MatrixSymbol {
 public:
  MatrixSymbol(int block_size, std::vector<ScalarSymbol> entries_row_major);

  int block_size() const { return block_size_; }
  const ScalarSymbol& entry(int row, int col) const;

  /// f(theta) as a dense s x s complex matrix.
  ComplexMatrix value(double theta) const;

  /// A_k, the s x s matrix of entrywise Fourier coefficients.
  DenseMatrix coefficient(int k) const;

  /// Checks A_k = A_k^T for |k| <= max_index; throws std::invalid_argument
  /// on the first violation.
  void validate_hermitian_coefficients(int max_index) const;

 private:
  int block_size_;
  std::vector<ScalarSymbol> entries_;
};

/// The uniform sampling grid theta_j = -2pi + j*(4pi/n), j = 1..n. The left
/// endpoint -2pi is excluded and the right endpoint 2pi is hit exactly.
class SymbolGrid {
 public:
  explicit SymbolGrid(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  double node(int j) const { return nodes_[static_cast<Index>(j - 1)]; }  // 1-based
  const RealVector& nodes() const { return nodes_; }

 private:
  RealVector nodes_;
};

/// Samples of psi_{|f|} on SymbolGrid(n): |f(theta)| on [0, 2pi] and
/// -|f(theta + 2pi)| on [-2pi, 0). The node at 0 belongs to the positive
/// branch.
RealVector psi_samples(const ScalarSymbol& sym, int n);

/// Samples of phi_{|f|}: |f(theta)| on [0, 2pi] and -|f(-theta)| on
/// [-2pi, 0). A rearrangement of psi_{|f|}; identical entrywise whenever the
/// coefficients are real.
RealVector phi_samples(const ScalarSymbol& sym, int n);

/// Eigenvalues of (f(theta) f(theta)^*)^{1/2}, i.e. the singular values of
/// f(theta), ascending.
RealVector matrix_abs_eigs(const MatrixSymbol& sym, double theta);

/// Block version of psi_samples: at each grid node the s singular values of
/// f(theta), negated on the [-2pi, 0) branch; s*n values concatenated in node
/// order.
RealVector psi_samples_block(const MatrixSymbol& sym, int n);

}  // namespace symtoep
