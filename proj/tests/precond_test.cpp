#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "symtoep/builtins.hpp"
#include "symtoep/precond.hpp"
#include "symtoep/transforms.hpp"

using namespace symtoep;

namespace {

ScalarSymbol scalar(const std::string& name) {
  return std::get<ScalarSymbol>(builtin_symbol(name));
}

// |C|^{-1} Y T densified through routes that avoid the Fourier apply:
// dense circulant, dense (C^T C)^{1/2}, dense inverse, general eigensolver.
RealVector dense_preconditioned_eigs(const ScalarSymbol& f, int n,
                                     CirculantKind kind) {
  const CirculantSpec c = circulant_column(f, n, kind);
  const DenseMatrix abs_c = testing::dense_abs(testing::dense_circulant(c.first_column));
  const Eigen::MatrixXd yt = flip_left(build_toeplitz(f, n));
  const Eigen::MatrixXd m = Eigen::MatrixXd(abs_c).inverse() * yt;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  RealVector real_parts(n);
  for (Index i = 0; i < n; ++i) {
    real_parts[i] = solver.eigenvalues()[i].real();
    CHECK(std::abs(solver.eigenvalues()[i].imag()) <= 1e-7 * m.norm());
  }
  std::sort(real_parts.begin(), real_parts.end());
  return real_parts;
}

}  // namespace

TEST_CASE("abs_circulant_eigs basics") {
  ComplexVector shift = ComplexVector::Zero(6);
  shift[1] = 1.0;
  CirculantSpec c;
  c.n = 6;
  c.first_column = RealVector::Zero(6);
  c.first_column[1] = 1.0;
  c.eigs = circulant_eigs(c.first_column);
  const RealVector moduli = abs_circulant_eigs(c);
  CHECK((moduli - RealVector::Ones(6)).cwiseAbs().maxCoeff() <= 1e-13);

  RealVector negative = RealVector::Zero(4);
  negative[0] = -3.0;
  const RealVector all_three = abs_circulant_eigs(make_circulant(negative));
  CHECK((all_three - 3.0 * RealVector::Ones(4)).cwiseAbs().maxCoeff() <=
        1e-13);
}

TEST_CASE("abs_circulant_eigs of the Strang circulant at n = 4") {
  const CirculantSpec c = strang_column(scalar("ex4.1"), 4);
  const RealVector moduli = abs_circulant_eigs(c);
  RealVector expected(4);
  expected << 10, 2, 14, 2;
  CHECK((moduli - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("identity circulant leaves the operand unchanged") {
  std::mt19937 rng(53);
  RealVector e0 = RealVector::Zero(12);
  e0[0] = 1.0;
  const CirculantSpec c = make_circulant(e0);
  const DenseMatrix x = testing::random_matrix(12, 5, rng);
  const DenseMatrix y = apply_abs_inv_sqrt(c, x);
  CHECK((y - x).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("apply_abs_inv_sqrt scales as alpha^{-1/2}") {
  std::mt19937 rng(59);
  const CirculantSpec base = strang_column(scalar("ex4.4"), 16);
  const CirculantSpec scaled = make_circulant(RealVector(4.0 * base.first_column));
  const DenseMatrix x = testing::random_matrix(16, 3, rng);
  const DenseMatrix y_base = apply_abs_inv_sqrt(base, x);
  const DenseMatrix y_scaled = apply_abs_inv_sqrt(scaled, x);
  CHECK((y_scaled - 0.5 * y_base).cwiseAbs().maxCoeff() <=
        1e-12 * y_base.cwiseAbs().maxCoeff());
}

TEST_CASE("double application composes to the full inverse modulus") {
  std::mt19937 rng(61);
  const int n = 32;
  const CirculantSpec c = strang_column(scalar("ex4.4"), n);
  const DenseMatrix x = testing::random_matrix(n, n, rng);

  const DenseMatrix twice =
      apply_abs_inv_sqrt(c, apply_abs_inv_sqrt(c, x));

  // reference: dense |C|^{-1} x
  const DenseMatrix abs_c =
      testing::dense_abs(testing::dense_circulant(c.first_column));
  const DenseMatrix reference =
      DenseMatrix(Eigen::MatrixXd(abs_c).inverse() * x);
  CHECK((twice - reference).cwiseAbs().maxCoeff() <=
        1e-10 * x.cwiseAbs().maxCoeff());
}

TEST_CASE("apply_abs_inv_sqrt is self-adjoint") {
  std::mt19937 rng(67);
  const int n = 24;
  const CirculantSpec c = chan_optimal_column(scalar("ex4.3"), n);
  const DenseMatrix x = testing::random_matrix(n, 1, rng);
  const DenseMatrix y = testing::random_matrix(n, 1, rng);
  const double lhs = (apply_abs_inv_sqrt(c, x).transpose() * y)(0, 0);
  const double rhs = (x.transpose() * apply_abs_inv_sqrt(c, y))(0, 0);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs) + 1e-12);
}

TEST_CASE("all-zero circulant raises the singular-preconditioner error") {
  const CirculantSpec c = make_circulant(RealVector::Zero(8));
  const DenseMatrix x = DenseMatrix::Identity(8, 8);
  CHECK_THROWS_AS(apply_abs_inv_sqrt(c, x), singular_preconditioner_error);
  CHECK_THROWS_AS(apply_circulant_pinv(c, x), singular_preconditioner_error);
}

TEST_CASE("|C| is positive definite whenever no eigenvalue vanishes") {
  for (const auto& name : {"ex4.1", "ex4.4", "ex4.6"}) {
    for (const CirculantKind kind :
         {CirculantKind::strang, CirculantKind::chan}) {
      const CirculantSpec c = circulant_column(scalar(name), 24, kind);
      REQUIRE(abs_circulant_eigs(c).minCoeff() > 0.0);
      const DenseMatrix abs_dense =
          testing::dense_abs(testing::dense_circulant(c.first_column));
      CHECK(sym_eigs(abs_dense).minCoeff() > 0.0);
    }
  }
}

TEST_CASE("preconditioned spectrum of the constant symbol is the flip") {
  const ScalarSymbol one = ScalarSymbol::trig_polynomial({{0, 1.0}});
  const int n = 11;
  const RealVector eigs =
      preconditioned_spectrum(one, n, CirculantKind::strang);
  for (Index i = 0; i < n; ++i)
    CHECK(std::abs(std::abs(eigs[i]) - 1.0) <= 1e-12);
  const Inertia counts = inertia(eigs, 0.5);
  CHECK(counts.positive == 6);  // ceil(11/2)
  CHECK(counts.negative == 5);
}

TEST_CASE("symmetric form matches the dense nonsymmetric eigensolver") {
  for (const auto& name : {"ex4.3", "ex4.6"}) {
    for (const CirculantKind kind :
         {CirculantKind::strang, CirculantKind::chan}) {
      const int n = 32;
      const RealVector fast = preconditioned_spectrum(scalar(name), n, kind);
      const RealVector dense = dense_preconditioned_eigs(scalar(name), n, kind);
      const double scale = std::max(fast.cwiseAbs().maxCoeff(), 1.0);
      CHECK((fast - dense).cwiseAbs().maxCoeff() <= 1e-7 * scale);
    }
  }
}

TEST_CASE("preconditioning preserves inertia (Sylvester)") {
  for (const auto& name : {"ex4.1", "ex4.2", "ex4.3", "ex4.4"}) {
    for (const CirculantKind kind :
         {CirculantKind::strang, CirculantKind::chan}) {
      for (const int n : {50, 157, 200}) {
        const ScalarSymbol f = scalar(name);
        const RealVector plain = sym_eigs(flip_left(build_toeplitz(f, n)));
        const RealVector precond = preconditioned_spectrum(f, n, kind);
        const Inertia a = inertia(plain, default_inertia_tol(plain));
        const Inertia b = inertia(precond, default_inertia_tol(precond));
        CHECK(a.positive == b.positive);
        CHECK(a.negative == b.negative);
        CHECK(a.zero == b.zero);
      }
    }
  }
}

TEST_CASE("pseudo-inverse against a circulant reproduces unit singular values") {
  const CirculantSpec c = strang_column(scalar("ex4.4"), 20);
  const DenseMatrix dense_c = testing::dense_circulant(c.first_column);
  const RealVector sv = singular_values(apply_circulant_pinv(c, dense_c));
  CHECK((sv - RealVector::Ones(20)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("pinv singular values for the constant symbol are all one") {
  const ScalarSymbol one = ScalarSymbol::trig_polynomial({{0, 1.0}});
  const RealVector sv =
      pinv_times_toeplitz_svs(one, 9, CirculantKind::strang);
  CHECK((sv - RealVector::Ones(9)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("cluster report basics") {
  RealVector eigs(6);
  eigs << -1.0, -1.0, -1.0, 1.0, 1.0, 1.0;
  const ClusterReport exact = cluster_report(eigs, 0.3);
  CHECK(exact.count_near_minus1 == 3);
  CHECK(exact.count_near_plus1 == 3);
  CHECK(exact.outlier_count == 0);
  CHECK(exact.count_near_plus1 + exact.count_near_minus1 +
            exact.outlier_count ==
        exact.n);

  RealVector positive(4);
  positive << 0.999, 1.0, 1.001, 5.0;
  const ClusterReport onesided = cluster_report(positive, 0.01);
  CHECK(onesided.count_near_minus1 == 0);
  CHECK(onesided.count_near_plus1 == 3);
  CHECK(onesided.outlier_count == 1);
  CHECK(onesided.outliers[0] == 5.0);

  CHECK_THROWS_AS(cluster_report(eigs, 0.0), std::invalid_argument);
}
