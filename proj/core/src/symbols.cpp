#include "symtoep/symbols.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace symtoep {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_real(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-12)
    throw numeric_error(std::string(what) + ": imaginary residue above 1e-12");
  return z.real();
}

}  // namespace

double reduce_to_principal(double theta) {
  double r = theta - kTwoPi * std::round(theta / kTwoPi);
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

ScalarSymbol ScalarSymbol::trig_polynomial(const std::map<int, double>& coeffs) {
  TrigPolynomial poly;
  for (const auto& [k, a] : coeffs) {
    if (!std::isfinite(a))
      throw std::invalid_argument("trig_polynomial: non-finite coefficient");
    if (a != 0.0) poly.coeffs.emplace(k, a);
  }
  return ScalarSymbol(Impl{std::move(poly)});
}

ScalarSymbol ScalarSymbol::theta_squared() {
  return closed_form(
      [](int k) {
        if (k == 0) return kPi * kPi / 3.0;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * 2.0 / (static_cast<double>(k) * static_cast<double>(k));
      },
      [](double theta) { return theta * theta; }, "theta2");
}

ScalarSymbol ScalarSymbol::closed_form(
    std::function<double(int)> coefficient_rule,
    std::function<double(double)> evaluator, std::string label) {
  if (!coefficient_rule || !evaluator)
    throw std::invalid_argument("closed_form: missing rule or evaluator");
  return ScalarSymbol(Impl{ClosedFormSeries{std::move(coefficient_rule),
                                            std::move(evaluator),
                                            std::move(label)}});
}

ScalarSymbol ScalarSymbol::piecewise_constant(std::vector<double> breakpoints,
                                              std::vector<double> values) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size())
    throw std::invalid_argument(
        "piecewise_constant: need m+1 breakpoints for m values");
  if (breakpoints.front() != -kPi || breakpoints.back() != kPi)
    throw std::invalid_argument(
        "piecewise_constant: breakpoints must start at -pi and end at pi");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      throw std::invalid_argument(
          "piecewise_constant: breakpoints must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("piecewise_constant: non-finite value");
  return ScalarSymbol(
      Impl{PiecewiseConstant{std::move(breakpoints), std::move(values)}});
}

ScalarSymbol::Kind ScalarSymbol::kind() const {
  if (std::holds_alternative<TrigPolynomial>(impl_))
    return Kind::trig_polynomial;
  if (std::holds_alternative<ClosedFormSeries>(impl_))
    return Kind::closed_form_series;
  return Kind::piecewise_constant;
}

double ScalarSymbol::fourier_coefficient(int k) const {
  if (const auto* poly = std::get_if<TrigPolynomial>(&impl_)) {
    auto it = poly->coeffs.find(k);
    return it == poly->coeffs.end() ? 0.0 : it->second;
  }
  if (const auto* series = std::get_if<ClosedFormSeries>(&impl_))
    return series->coefficient(k);

  const auto& pw = std::get<PiecewiseConstant>(impl_);
  if (k == 0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pw.values.size(); ++i)
      sum += pw.values[i] * (pw.breaks[i + 1] - pw.breaks[i]);
    return sum / kTwoPi;
  }
  // a_k = (1/2pi) sum_i v_i (e^{-ik b_{i-1}} - e^{-ik b_i}) / (ik)
  const std::complex<double> ik(0.0, static_cast<double>(k));
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t i = 0; i < pw.values.size(); ++i) {
    const std::complex<double> lo =
        std::polar(1.0, -static_cast<double>(k) * pw.breaks[i]);
    const std::complex<double> hi =
        std::polar(1.0, -static_cast<double>(k) * pw.breaks[i + 1]);
    sum += pw.values[i] * (lo - hi);
  }
  return checked_real(sum / (ik * kTwoPi), "piecewise fourier_coefficient");
}

std::complex<double> ScalarSymbol::evaluate(double theta) const {
  const double r = reduce_to_principal(theta);
  if (const auto* poly = std::get_if<TrigPolynomial>(&impl_)) {
    std::complex<double> value(0.0, 0.0);
    for (const auto& [k, a] : poly->coeffs) {
      const double kr = static_cast<double>(k) * r;
      value += a * std::complex<double>(std::cos(kr), std::sin(kr));
    }
    return value;
  }
  if (const auto* series = std::get_if<ClosedFormSeries>(&impl_))
    return {series->evaluate(r), 0.0};

  const auto& pw = std::get<PiecewiseConstant>(impl_);
  if (r == -kPi) return {pw.values.back(), 0.0};  // seam: left value at +pi
  const auto it = std::upper_bound(pw.breaks.begin(), pw.breaks.end(), r);
  const auto interval =
      static_cast<std::size_t>(std::distance(pw.breaks.begin(), it)) - 1;
  return {pw.values[std::min(interval, pw.values.size() - 1)], 0.0};
}

ScalarSymbol ScalarSymbol::negated() const {
  if (const auto* poly = std::get_if<TrigPolynomial>(&impl_)) {
    std::map<int, double> neg;
    for (const auto& [k, a] : poly->coeffs) neg.emplace(k, -a);
    return trig_polynomial(neg);
  }
  if (const auto* series = std::get_if<ClosedFormSeries>(&impl_)) {
    auto coeff = series->coefficient;
    auto eval = series->evaluate;
    return closed_form([coeff](int k) { return -coeff(k); },
                       [eval](double t) { return -eval(t); },
                       "neg:" + series->label);
  }
  const auto& pw = std::get<PiecewiseConstant>(impl_);
  std::vector<double> neg(pw.values.size());
  std::transform(pw.values.begin(), pw.values.end(), neg.begin(),
                 [](double v) { return -v; });
  return piecewise_constant(pw.breaks, std::move(neg));
}

const std::map<int, double>& ScalarSymbol::coefficients() const {
  if (const auto* poly = std::get_if<TrigPolynomial>(&impl_))
    return poly->coeffs;
  throw std::logic_error("coefficients(): not a trigonometric polynomial");
}

const std::vector<double>& ScalarSymbol::breakpoints() const {
  if (const auto* pw = std::get_if<PiecewiseConstant>(&impl_))
    return pw->breaks;
  throw std::logic_error("breakpoints(): not piecewise constant");
}

const std::vector<double>& ScalarSymbol::values() const {
  if (const auto* pw = std::get_if<PiecewiseConstant>(&impl_))
    return pw->values;
  throw std::logic_error("values(): not piecewise constant");
}

const std::string& ScalarSymbol::label() const {
  if (const auto* series = std::get_if<ClosedFormSeries>(&impl_))
    return series->label;
  throw std::logic_error("label(): not a closed-form series");
}

MatrixSymbol::MatrixSymbol(int block_size,
                           std::vector<ScalarSymbol> entries_row_major)
    : block_size_(block_size), entries_(std::move(entries_row_major)) {
  if (block_size < 1)
    throw std::invalid_argument("MatrixSymbol: block size must be >= 1");
  if (entries_.size() !=
      static_cast<std::size_t>(block_size) * static_cast<std::size_t>(block_size))
    throw std::invalid_argument("MatrixSymbol: expected s*s entries");
}

const ScalarSymbol& MatrixSymbol::entry(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) *
                      static_cast<std::size_t>(block_size_) +
                  static_cast<std::size_t>(col)];
}

ComplexMatrix MatrixSymbol::value(double theta) const {
  ComplexMatrix out(block_size_, block_size_);
  for (int i = 0; i < block_size_; ++i)
    for (int j = 0; j < block_size_; ++j)
      out(i, j) = entry(i, j).evaluate(theta);
  return out;
}

DenseMatrix MatrixSymbol::coefficient(int k) const {
  DenseMatrix out(block_size_, block_size_);
  for (int i = 0; i < block_size_; ++i)
    for (int j = 0; j < block_size_; ++j)
      out(i, j) = entry(i, j).fourier_coefficient(k);
  return out;
}

void MatrixSymbol::validate_hermitian_coefficients(int max_index) const {
  for (int k = -max_index; k <= max_index; ++k) {
    const DenseMatrix a = coefficient(k);
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (((a - DenseMatrix(a.transpose())).cwiseAbs().maxCoeff()) >
        1e-12 * scale)
      throw std::invalid_argument(
          "MatrixSymbol: coefficient matrix A_" + std::to_string(k) +
          " is not Hermitian");
  }
}

SymbolGrid::SymbolGrid(int n) {
  if (n < 1) throw std::invalid_argument("SymbolGrid: n must be >= 1");
  nodes_.resize(n);
  const double span = 2.0 * kTwoPi;  // 4*pi
  for (int j = 1; j <= n; ++j)
    nodes_[j - 1] =
        -kTwoPi + span * (static_cast<double>(j) / static_cast<double>(n));
  // j/n is exact and monotone, and j = n lands on 2*pi exactly.
}

RealVector psi_samples(const ScalarSymbol& sym, int n) {
  const SymbolGrid grid(n);
  RealVector out(n);
  for (int j = 1; j <= n; ++j) {
    const double theta = grid.node(j);
    out[j - 1] = theta >= 0.0 ? sym.abs_value(theta)
                              : -sym.abs_value(theta + kTwoPi);
  }
  return out;
}

RealVector phi_samples(const ScalarSymbol& sym, int n) {
  const SymbolGrid grid(n);
  RealVector out(n);
  for (int j = 1; j <= n; ++j) {
    const double theta = grid.node(j);
    out[j - 1] =
        theta >= 0.0 ? sym.abs_value(theta) : -sym.abs_value(-theta);
  }
  return out;
}

RealVector matrix_abs_eigs(const MatrixSymbol& sym, double theta) {
  const ComplexMatrix f = sym.value(theta);
  if (!f.allFinite())
    throw numeric_error("matrix_abs_eigs: non-finite symbol value");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
  RealVector sv = svd.singularValues();  // descending
  std::reverse(sv.begin(), sv.end());
  return sv;
}

RealVector psi_samples_block(const MatrixSymbol& sym, int n) {
  const SymbolGrid grid(n);
  const int s = sym.block_size();
  RealVector out(static_cast<Index>(s) * static_cast<Index>(n));
  for (int j = 1; j <= n; ++j) {
    const double theta = grid.node(j);
    const bool positive = theta >= 0.0;
    const RealVector vals =
        matrix_abs_eigs(sym, positive ? theta : theta + kTwoPi);
    for (int i = 0; i < s; ++i)
      out[static_cast<Index>(j - 1) * s + i] =
          positive ? vals[i] : -vals[i];
  }
  return out;
}

}  // namespace symtoep
