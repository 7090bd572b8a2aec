#pragma once

#include "symtoep/types.hpp"

namespace symtoep {

/// Discrete Fourier transform of arbitrary length (prime lengths included).
///
/// Forward:  X_k = sum_j x_j e^{-2*pi*i*j*k/n}   (un-normalized)
/// Inverse:  x_j = (1/n) sum_k X_k e^{+2*pi*i*j*k/n}
///
/// These two conventions are fixed project-wide; every other module goes
/// through this entry point instead of re-deriving its own normalization.
/// Power-of-two lengths use an iterative radix-2 FFT, everything else runs
/// through Bluestein's chirp-z reduction, so the cost is O(n log n) for all n.
///
/// Throws std::invalid_argument on empty input and numeric_error on
/// non-finite entries.
ComplexVector dft(const ComplexVector& x, bool inverse = false);

/// Eigenvalues of the circulant matrix with the given first column:
///   lambda_k = sum_l c_l e^{+2*pi*i*l*k/n},  k = 0..n-1,
/// paired with the eigenvectors v_k of components e^{-2*pi*i*j*k/n}/sqrt(n)
/// (the columns of the unitary Fourier matrix F_n).
ComplexVector circulant_eigs(const ComplexVector& first_column);
ComplexVector circulant_eigs(const RealVector& first_column);

}  // namespace symtoep
