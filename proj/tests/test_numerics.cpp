#include <doctest.h>

#include <cmath>
#include <random>

#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"

using namespace su2cs;

TEST_CASE("log_gamma at integers") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-15);
  CHECK(std::abs(log_gamma(5.0) - 3.1780538303479458) <= 1e-14);
  CHECK(std::abs(log_factorial(4) - std::log(24.0)) <= 1e-14);
  CHECK(log_factorial(0) == 0.0);
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_factorial(-1), DomainError);
}

TEST_CASE("associated Laguerre frozen values") {
  CHECK(assoc_laguerre(0, 3, 7.25) == 1.0);
  CHECK(assoc_laguerre(0, 0, -2.0) == 1.0);
  CHECK(std::abs(assoc_laguerre(1, 0, 0.5) - 0.5) <= 1e-15);
  CHECK(std::abs(assoc_laguerre(2, 1, 2.0) + 1.0) <= 1e-14);
  // L_3^2(x) = (60 - 60 x + 15 x^2 - x^3) / 6 at x = 1.5
  const double x = 1.5;
  CHECK(std::abs(assoc_laguerre(3, 2, x) - (60 - 60 * x + 15 * x * x - x * x * x) / 6) <= 1e-13);
}

TEST_CASE("matrix_exp special cases") {
  const OperatorMatrix zero(4);
  CHECK(max_abs_diff(matrix_exp(zero), OperatorMatrix::identity(4)) == 0.0);

  const std::vector<double> d{-1.0, 0.0, 0.5, 2.0};
  const OperatorMatrix e = matrix_exp(OperatorMatrix::diagonal(d));
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(e(i, i) - std::exp(d[i])) <= 1e-14 * std::exp(d[i]));
  CHECK(max_off_diagonal(e) == 0.0);

  const double theta = 0.8;
  OperatorMatrix a(2);
  a(0, 1) = -0.5 * theta;
  a(1, 0) = 0.5 * theta;
  const OperatorMatrix r = matrix_exp(a);
  CHECK(std::abs(r(0, 0) - std::cos(0.5 * theta)) <= 1e-14);
  CHECK(std::abs(r(0, 1) + std::sin(0.5 * theta)) <= 1e-14);
  CHECK(std::abs(r(1, 0) - std::sin(0.5 * theta)) <= 1e-14);
  CHECK(std::abs(r(1, 1) - std::cos(0.5 * theta)) <= 1e-14);
}

TEST_CASE("matrix_exp of anti-Hermitian is unitary and exp(-A) inverts it") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  const std::size_t n = 9;
  OperatorMatrix h(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const cplx v = r == c ? cplx{g(rng), 0.0} : cplx{g(rng), g(rng)};
      h(r, c) = v;
      h(c, r) = std::conj(v);
    }
  const OperatorMatrix u = matrix_exp(cplx{0.0, 1.3} * h);
  CHECK(max_abs_diff(u * adjoint(u), OperatorMatrix::identity(n)) <= 1e-10);
  CHECK(max_abs_diff(u * matrix_exp(cplx{0.0, -1.3} * h), OperatorMatrix::identity(n)) <= 1e-10);
}

TEST_CASE("hermitian_eigensystem") {
  const std::vector<double> d{3.0, 1.0, 2.0};
  const auto vals = hermitian_eigenvalues(OperatorMatrix::diagonal(d));
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == doctest::Approx(1.0));
  CHECK(vals[1] == doctest::Approx(2.0));
  CHECK(vals[2] == doctest::Approx(3.0));

  OperatorMatrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const EigenSystem es = hermitian_eigensystem(x);
  CHECK(std::abs(es.values[0] + 1.0) <= 1e-14);
  CHECK(std::abs(es.values[1] - 1.0) <= 1e-14);

  OperatorMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(bad), ContractError);
}

TEST_CASE("hermitian_eigensystem reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {1u, 2u, 5u, 17u, 41u}) {
    OperatorMatrix a(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        const cplx v = r == c ? cplx{u(rng), 0.0} : cplx{u(rng), u(rng)};
        a(r, c) = v;
        a(c, r) = std::conj(v);
      }
    const EigenSystem es = hermitian_eigensystem(a);
    const OperatorMatrix rebuilt = es.vectors * OperatorMatrix::diagonal(es.values) * adjoint(es.vectors);
    CHECK(max_abs_diff(rebuilt, a) <= 1e-9);
    CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors, OperatorMatrix::identity(n)) <= 1e-10);
    for (std::size_t k = 1; k < n; ++k) CHECK(es.values[k - 1] <= es.values[k]);
  }
}

TEST_CASE("radial quadrature against Gaussian moments") {
  CHECK(std::abs(radial_quadrature([](double r) { return std::exp(-r * r); }) - 0.5) <= 1e-8);
  CHECK(radial_quadrature([](double) { return 0.0; }) == 0.0);
  CHECK(std::abs(radial_quadrature([](double r) { return 2.0 * std::exp(-r * r) * r * r; }) - 1.0) <= 1e-8);
  CHECK_THROWS_AS(radial_quadrature([](double) { return 1.0; }, -1.0), DomainError);
  CHECK_THROWS_AS(radial_quadrature([](double) { return 1.0; }, 8.0, 4), DomainError);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const QuadratureRule q = gauss_legendre(10, -1.0, 2.0);
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], 19);
  // int_{-1}^{2} x^19 dx = (2^20 - 1) / 20
  CHECK(std::abs(s - (1048576.0 - 1.0) / 20.0) <= 1e-9);
}
