#include "symtoep/structured.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "symtoep/transforms.hpp"

namespace symtoep {
namespace {

// Coefficients a_{-(n-1)} .. a_{n-1} as a flat table; index k lives at
// table[k + n - 1]. One pass per symbol keeps the closed-form families at
// O(n) coefficient evaluations per matrix build.
std::vector<double> diagonal_table(const ScalarSymbol& sym, int n) {
  std::vector<double> table(2 * static_cast<std::size_t>(n) - 1);
  for (int k = -(n - 1); k <= n - 1; ++k) {
    const double a = sym.fourier_coefficient(k);
    if (!std::isfinite(a))
      throw numeric_error("build: non-finite Fourier coefficient a_" +
                          std::to_string(k));
    table[static_cast<std::size_t>(k + n - 1)] = a;
  }
  return table;
}

void require_positive(int n, const char* what) {
  if (n < 1)
    throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

CirculantSpec make_circulant(RealVector first_column) {
  if (first_column.size() == 0)
    throw std::invalid_argument("make_circulant: empty first column");
  CirculantSpec spec;
  spec.n = first_column.size();
  spec.eigs = circulant_eigs(first_column);
  spec.first_column = std::move(first_column);
  return spec;
}

DenseMatrix build_toeplitz(const ScalarSymbol& sym, int n) {
  require_positive(n, "build_toeplitz");
  const auto table = diagonal_table(sym, n);
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(i, j) = table[static_cast<std::size_t>(i - j + n - 1)];
  return out;
}

DenseMatrix flip_left(const DenseMatrix& m) {
  return m.colwise().reverse();
}

DenseMatrix build_hankel(const ScalarSymbol& sym, HankelSign sign, int nu) {
  require_positive(nu, "build_hankel");
  std::vector<double> anti(2 * static_cast<std::size_t>(nu) - 1);
  for (int d = 1; d <= 2 * nu - 1; ++d)
    anti[static_cast<std::size_t>(d - 1)] =
        sym.fourier_coefficient(sign == HankelSign::plus ? d : -d);
  DenseMatrix out(nu, nu);
  for (int i = 1; i <= nu; ++i)
    for (int j = 1; j <= nu; ++j)
      out(i - 1, j - 1) = anti[static_cast<std::size_t>(i + j - 2)];
  return out;
}

DenseMatrix EvenDecomposition::assemble() const {
  const Index nu = top_left.rows();
  DenseMatrix out(2 * nu, 2 * nu);
  out.topLeftCorner(nu, nu) = top_left;
  out.topRightCorner(nu, nu) = top_right;
  out.bottomLeftCorner(nu, nu) = bottom_left;
  out.bottomRightCorner(nu, nu) = bottom_right;
  return out;
}

EvenDecomposition decompose_even(const ScalarSymbol& sym, int n) {
  require_positive(n, "decompose_even");
  if (n % 2 != 0)
    throw std::invalid_argument("decompose_even: n must be even");
  const int nu = n / 2;
  EvenDecomposition blocks;
  // Y H Y reverses both the row and the column order.
  blocks.top_left = build_hankel(sym, HankelSign::plus, nu).reverse();
  blocks.top_right = flip_left(build_toeplitz(sym, nu));
  blocks.bottom_left = blocks.top_right;
  blocks.bottom_right = build_hankel(sym, HankelSign::minus, nu);
  return blocks;
}

DenseMatrix build_block_toeplitz(const MatrixSymbol& sym, int n) {
  require_positive(n, "build_block_toeplitz");
  sym.validate_hermitian_coefficients(n - 1);
  const int s = sym.block_size();
  std::vector<DenseMatrix> blocks(2 * static_cast<std::size_t>(n) - 1);
  for (int k = -(n - 1); k <= n - 1; ++k)
    blocks[static_cast<std::size_t>(k + n - 1)] = sym.coefficient(k);
  DenseMatrix out(static_cast<Index>(s) * n, static_cast<Index>(s) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.block(static_cast<Index>(i) * s, static_cast<Index>(j) * s, s, s) =
          blocks[static_cast<std::size_t>(i - j + n - 1)];
  return out;
}

DenseMatrix flip_kron_left(const DenseMatrix& m, int s) {
  if (s < 1) throw std::invalid_argument("flip_kron_left: s must be >= 1");
  if (m.rows() % s != 0)
    throw std::invalid_argument(
        "flip_kron_left: row count not divisible by block size");
  const Index nblocks = m.rows() / s;
  DenseMatrix out(m.rows(), m.cols());
  for (Index b = 0; b < nblocks; ++b)
    out.middleRows(b * s, s) = m.middleRows((nblocks - 1 - b) * s, s);
  return out;
}

CirculantSpec strang_column(const ScalarSymbol& sym, int n) {
  require_positive(n, "strang_column");
  RealVector column(n);
  const int half = n / 2;
  for (int j = 0; j < n; ++j)
    column[j] = sym.fourier_coefficient(j <= half ? j : j - n);
  return make_circulant(std::move(column));
}

CirculantSpec chan_optimal_column(const ScalarSymbol& sym, int n) {
  require_positive(n, "chan_optimal_column");
  RealVector column(n);
  for (int j = 0; j < n; ++j) {
    const double plus = sym.fourier_coefficient(j);
    const double minus = sym.fourier_coefficient(j - n);
    column[j] = (static_cast<double>(n - j) * plus +
                 static_cast<double>(j) * minus) /
                static_cast<double>(n);
  }
  return make_circulant(std::move(column));
}

CirculantSpec circulant_column(const ScalarSymbol& sym, int n,
                               CirculantKind kind) {
  return kind == CirculantKind::strang ? strang_column(sym, n)
                                       : chan_optimal_column(sym, n);
}

}  // namespace symtoep
