#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "symtoep/builtins.hpp"
#include "symtoep/symbols.hpp"

using namespace symtoep;

namespace {

constexpr double kPi = std::numbers::pi;

ScalarSymbol scalar(const std::string& name) {
  return std::get<ScalarSymbol>(builtin_symbol(name));
}

MatrixSymbol matrix(const std::string& name) {
  return std::get<MatrixSymbol>(builtin_symbol(name));
}

}  // namespace

TEST_CASE("theta^2 coefficients match the exact series") {
  const ScalarSymbol f = ScalarSymbol::theta_squared();
  CHECK(f.fourier_coefficient(0) == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-15));
  CHECK(f.fourier_coefficient(3) == doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
  CHECK(f.fourier_coefficient(-3) == doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
  CHECK(f.fourier_coefficient(4) == doctest::Approx(2.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("theta^2 coefficients agree with the quadrature oracle") {
  const ScalarSymbol f = ScalarSymbol::theta_squared();
  for (int k = 0; k <= 8; ++k) {
    const auto oracle = testing::fourier_coefficient_quadrature(
        [](double t) { return t * t; }, k, {-kPi, 0.0, kPi});
    CHECK(std::abs(oracle.imag()) < 1e-10);
    CHECK(f.fourier_coefficient(k) == doctest::Approx(oracle.real()).epsilon(1e-9));
  }
}

TEST_CASE("trig polynomial coefficients are table lookups") {
  const ScalarSymbol f = scalar("ex4.1");
  CHECK(f.fourier_coefficient(1) == -6.0);
  CHECK(f.fourier_coefficient(-1) == -6.0);
  CHECK(f.fourier_coefficient(0) == 2.0);
  CHECK(f.fourier_coefficient(2) == 0.0);
}

TEST_CASE("piecewise 5/2/5 coefficients: exact value and quadrature oracle") {
  const ScalarSymbol f = scalar("ex4.4");
  CHECK(f.fourier_coefficient(1) == doctest::Approx(-3.0 / kPi).epsilon(1e-14));
  CHECK(f.fourier_coefficient(0) == doctest::Approx(3.5).epsilon(1e-14));

  const auto value = [](double t) {
    if (t < -kPi / 2.0) return 5.0;
    if (t < kPi / 2.0) return 2.0;
    return 5.0;
  };
  for (int k = 0; k <= 8; ++k) {
    const auto oracle = testing::fourier_coefficient_quadrature(
        value, k, {-kPi, -kPi / 2.0, kPi / 2.0, kPi});
    CHECK(std::abs(oracle.imag()) < 1e-9);
    CHECK(f.fourier_coefficient(k) ==
          doctest::Approx(oracle.real()).epsilon(1e-9));
  }
}

TEST_CASE("constant symbols have vanishing nonzero-index coefficients") {
  const ScalarSymbol c = ScalarSymbol::trig_polynomial({{0, 3.25}});
  const ScalarSymbol pw =
      ScalarSymbol::piecewise_constant({-kPi, kPi}, {3.25});
  for (int k = 1; k <= 5; ++k) {
    CHECK(c.fourier_coefficient(k) == 0.0);
    CHECK(std::abs(pw.fourier_coefficient(k)) < 1e-14);
    CHECK(std::abs(pw.fourier_coefficient(-k)) < 1e-14);
  }
  CHECK(pw.fourier_coefficient(0) == doctest::Approx(3.25).epsilon(1e-15));
}

TEST_CASE("pointwise evaluation") {
  CHECK(scalar("ex4.1").evaluate(0.0).real() == doctest::Approx(-10.0));
  CHECK(scalar("ex4.2").evaluate(0.0).real() == doctest::Approx(18.0));
  CHECK(scalar("ex4.2").evaluate(0.0).imag() == doctest::Approx(0.0));
  // periodic reduction: theta = 3*pi lands on the seam, value pi^2
  CHECK(ScalarSymbol::theta_squared().evaluate(3.0 * kPi).real() ==
        doctest::Approx(kPi * kPi));
}

TEST_CASE("piecewise evaluation is right-continuous with the seam at +-pi") {
  const ScalarSymbol f = ScalarSymbol::piecewise_constant(
      {-kPi, -kPi / 2.0, kPi / 2.0, kPi}, {5.0, 2.0, 7.0});
  CHECK(f.evaluate(-kPi / 2.0).real() == 2.0);  // right-continuous
  CHECK(f.evaluate(kPi / 2.0).real() == 7.0);
  CHECK(f.evaluate(kPi).real() == 7.0);   // seam: left value at +pi
  CHECK(f.evaluate(-kPi).real() == 7.0);  // 2pi-periodic seam
  CHECK(f.evaluate(0.0).real() == 2.0);
}

TEST_CASE("symbol grid: strictly increasing, exact right endpoint") {
  const SymbolGrid grid(200);
  CHECK(grid.node(200) == 2.0 * kPi);
  CHECK(grid.node(100) == 0.0);
  for (int j = 1; j < 200; ++j) CHECK(grid.node(j) < grid.node(j + 1));
  CHECK_THROWS_AS(SymbolGrid(0), std::invalid_argument);
}

TEST_CASE("psi samples of the constant symbol split by grid branch") {
  // Nodes for n = 4 are -pi, 0, pi, 2pi; the node at 0 belongs to the
  // positive branch.
  const ScalarSymbol one = ScalarSymbol::trig_polynomial({{0, 1.0}});
  const RealVector psi = psi_samples(one, 4);
  CHECK(psi[0] == doctest::Approx(-1.0));
  CHECK(psi[1] == doctest::Approx(1.0));
  CHECK(psi[2] == doctest::Approx(1.0));
  CHECK(psi[3] == doctest::Approx(1.0));
  const RealVector phi = phi_samples(one, 4);
  CHECK((phi - psi).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("psi samples of theta^2 reproduce the four-branch formula") {
  const int n = 200;
  const ScalarSymbol f = ScalarSymbol::theta_squared();
  const RealVector psi = psi_samples(f, n);
  const SymbolGrid grid(n);
  for (int j = 1; j <= n; ++j) {
    const double theta = grid.node(j);
    double expected = 0.0;
    if (j <= n / 4)
      expected = -(theta + 2.0 * kPi) * (theta + 2.0 * kPi);
    else if (j <= n / 2)
      expected = -theta * theta;
    else if (j <= 3 * n / 4)
      expected = theta * theta;
    else
      expected = (theta - 2.0 * kPi) * (theta - 2.0 * kPi);
    CHECK(psi[j - 1] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("psi samples agree with direct pointwise evaluation") {
  const ScalarSymbol f = scalar("ex4.1");
  const int n = 8;
  const RealVector psi = psi_samples(f, n);
  const SymbolGrid grid(n);
  for (int j = 1; j <= n; ++j) {
    const double theta = grid.node(j);
    const double expected = theta >= 0.0
                                ? std::abs(f.evaluate(theta))
                                : -std::abs(f.evaluate(theta + 2.0 * kPi));
    CHECK(psi[j - 1] == expected);
  }
}

TEST_CASE("phi equals psi entrywise for real-coefficient symbols") {
  for (const auto& name : {"ex4.1", "ex4.2", "ex4.3", "ex4.4", "ex4.6"}) {
    const ScalarSymbol f = scalar(name);
    const RealVector psi = psi_samples(f, 50);
    const RealVector phi = phi_samples(f, 50);
    CHECK((psi - phi).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("sorted phi and psi are the same multiset (rearrangement)") {
  const ScalarSymbol f = scalar("ex4.2");
  RealVector psi = psi_samples(f, 300);
  RealVector phi = phi_samples(f, 300);
  std::sort(psi.begin(), psi.end());
  std::sort(phi.begin(), phi.end());
  CHECK((psi - phi).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("psi has the point symmetry of its construction") {
  const ScalarSymbol f = scalar("ex4.2");
  const int n = 64;
  const RealVector psi = psi_samples(f, n);
  const double scale = psi.cwiseAbs().maxCoeff();
  // theta_{j + n/2} = theta_j + 2pi, so negative-branch nodes pair with
  // their shifted positive-branch partners.
  for (int j = 1; j < n / 2; ++j)
    CHECK(std::abs(psi[j - 1] + psi[j - 1 + n / 2]) <= 1e-12 * scale);
}

TEST_CASE("coefficient symmetry a_k = a_{-k} for even symbols") {
  for (const auto& name : {"ex4.1", "ex4.3", "ex4.4"}) {
    const ScalarSymbol f = scalar(name);
    for (int k = 1; k <= 32; ++k)
      CHECK(f.fourier_coefficient(k) ==
            doctest::Approx(f.fourier_coefficient(-k)).epsilon(1e-14));
  }
}

TEST_CASE("piecewise coefficient decay bound") {
  const ScalarSymbol f = scalar("ex4.4");
  const auto& v = f.values();
  double jumps = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    jumps += std::abs(v[i] - v[(i + 1) % v.size()]);
  const double c = jumps / (2.0 * kPi) * 2.0;
  for (int k = 1; k <= 1000; ++k)
    CHECK(std::abs(f.fourier_coefficient(k)) <= c / static_cast<double>(k));
}

TEST_CASE("matrix_abs_eigs on the two-branch symbol") {
  const MatrixSymbol f = matrix("ex4.5");
  const RealVector at_zero = matrix_abs_eigs(f, 0.0);
  CHECK(at_zero[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at_zero[1] == doctest::Approx(12.0).epsilon(1e-12));
  const RealVector at_pi = matrix_abs_eigs(f, kPi);
  CHECK(at_pi[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(at_pi[1] == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("matrix_abs_eigs reduces to |f| for s = 1") {
  const MatrixSymbol wrapped(1, {scalar("ex4.2")});
  for (double theta : {-2.0, 0.0, 0.7, kPi}) {
    const RealVector v = matrix_abs_eigs(wrapped, theta);
    CHECK(v.size() == 1);
    CHECK(v[0] ==
          doctest::Approx(std::abs(scalar("ex4.2").evaluate(theta)))
              .epsilon(1e-12));
  }
}

TEST_CASE("block psi samples: s = 1 matches the scalar sampling") {
  const MatrixSymbol wrapped(1, {scalar("ex4.1")});
  const RealVector block = psi_samples_block(wrapped, 32);
  const RealVector plain = psi_samples(scalar("ex4.1"), 32);
  CHECK((block - plain).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("block psi samples live on the two branches and mirror") {
  const MatrixSymbol f = matrix("ex4.5");
  const int n = 200;
  const int s = f.block_size();
  const RealVector samples = psi_samples_block(f, n);
  REQUIRE(samples.size() == static_cast<Index>(s) * n);

  for (Index i = 0; i < samples.size(); ++i) {
    const double v = std::abs(samples[i]);
    const bool in_branches = (v >= 1.0 - 1e-9 && v <= 3.0 + 1e-9) ||
                             (v >= 8.0 - 1e-9 && v <= 12.0 + 1e-9);
    CHECK(in_branches);
  }

  // node j (negative branch) pairs with node j + n/2 = theta_j + 2pi
  for (int j = 1; j < n / 2; ++j)
    for (int i = 0; i < s; ++i) {
      const double neg = samples[static_cast<Index>(j - 1) * s + i];
      const double pos = samples[static_cast<Index>(j - 1 + n / 2) * s + i];
      CHECK(neg < 0.0);
      CHECK(std::abs(neg + pos) <= 1e-12 * 12.0);
    }
}

TEST_CASE("matrix symbol validates Hermitian coefficients") {
  const ScalarSymbol a = ScalarSymbol::trig_polynomial({{1, 1.0}});
  const ScalarSymbol b = ScalarSymbol::trig_polynomial({{1, 2.0}});
  const ScalarSymbol z = ScalarSymbol::trig_polynomial({});
  const MatrixSymbol bad(2, {z, a, b, z});
  CHECK_THROWS_AS(bad.validate_hermitian_coefficients(2),
                  std::invalid_argument);
  matrix("ex4.5").validate_hermitian_coefficients(8);  // does not throw
}

TEST_CASE("piecewise constructor rejects malformed input") {
  CHECK_THROWS_AS(ScalarSymbol::piecewise_constant({-kPi, 0.5}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ScalarSymbol::piecewise_constant({-kPi, 0.0, kPi}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ScalarSymbol::piecewise_constant({-kPi, 0.5, 0.25, kPi}, {1.0, 2.0, 3.0}),
      std::invalid_argument);
}
