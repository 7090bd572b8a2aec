#pragma once

#include <Eigen/Core>
#include <complex>
#include <stdexcept>

namespace symtoep {

using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

// Row-major so that the CSV export (one matrix row per line) walks memory in
// storage order.
using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                    Eigen::Dynamic, Eigen::RowMajor>;

using Index = Eigen::Index;

/// Violation of a numerical contract: non-finite data, asymmetry beyond the
/// accepted band, an imaginary residue above tolerance, or solver failure.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every circulant eigenvalue fell below the pseudo-inverse threshold, so the
/// preconditioner has no invertible part to work with.
class singular_preconditioner_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

}  // namespace symtoep
