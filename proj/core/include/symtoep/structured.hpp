#pragma once

#include "symtoep/symbols.hpp"
#include "symtoep/types.hpp"

namespace symtoep {

/// A circulant matrix described by its first column, with the DFT eigenvalue
/// vector cached at construction.
struct CirculantSpec {
  Index n = 0;
  RealVector first_column;
  ComplexVector eigs;  // circulant_eigs(first_column)
};

CirculantSpec make_circulant(RealVector first_column);

/// T_n[f] with entry (s, t) = a_{s-t}. The first column carries
/// a_0, a_1, ..., a_{n-1} and the first row carries a_0, a_{-1}, ...
/// This orientation is fixed project-wide; all circulant formulas below are
/// expressed in it.
DenseMatrix build_toeplitz(const ScalarSymbol& sym, int n);

/// Y*M: the row order of M reversed (Y is the anti-identity / exchange
/// matrix). An exact involution.
DenseMatrix flip_left(const DenseMatrix& m);

enum class HankelSign { plus, minus };

/// The nu x nu Hankel matrix with entry (i, j) = a_{i+j-1} for the plus sign
/// (a_1 in the corner (1,1), a_{2nu-1} in (nu,nu)) and a_{-(i+j-1)} for the
/// minus sign.
DenseMatrix build_hankel(const ScalarSymbol& sym, HankelSign sign, int nu);

/// The four blocks of Y_n T_n[f] for even n = 2*nu:
///
///   [ Y_nu H_nu[f,+] Y_nu    Y_nu T_nu[f] ]
///   [ Y_nu T_nu[f]           H_nu[f,-]    ]
///
/// Reassembling them reproduces flip_left(build_toeplitz(sym, n)) entry for
/// entry, exactly (pure copying of the same coefficients).
struct EvenDecomposition {
  DenseMatrix top_left;
  DenseMatrix top_right;
  DenseMatrix bottom_left;
  DenseMatrix bottom_right;

  DenseMatrix assemble() const;
};

EvenDecomposition decompose_even(const ScalarSymbol& sym, int n);

/// The sn x sn block Toeplitz matrix with block (s, t) = A_{s-t}. Validates
/// the Hermitian-coefficient requirement on every index it uses.
DenseMatrix build_block_toeplitz(const MatrixSymbol& sym, int n);

/// (Y_n (x) I_s) * M: reverses the order of the n row blocks of size s.
DenseMatrix flip_kron_left(const DenseMatrix& m, int s);

enum class CirculantKind { strang, chan };

/// Strang circulant: copies the central diagonals of T_n[f],
///   c_j = a_j for 0 <= j <= floor(n/2),  c_j = a_{j-n} otherwise.
/// At even n the tied index j = n/2 takes the positive-index coefficient.
CirculantSpec strang_column(const ScalarSymbol& sym, int n);

/// Frobenius-optimal circulant: c_j = ((n-j) a_j + j a_{j-n}) / n.
CirculantSpec chan_optimal_column(const ScalarSymbol& sym, int n);

CirculantSpec circulant_column(const ScalarSymbol& sym, int n,
                               CirculantKind kind);

}  // namespace symtoep
