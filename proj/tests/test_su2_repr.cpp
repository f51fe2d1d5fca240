#include <doctest.h>

#include <cmath>

#include "su2cs/errors.hpp"
#include "su2cs/su2_repr.hpp"

using namespace su2cs;

TEST_CASE("HalfInt parsing and arithmetic") {
  CHECK(HalfInt::from_double(1.5).twice() == 3);
  CHECK(HalfInt::from_double(-0.5).twice() == -1);
  CHECK(HalfInt::from_double(2.0).is_integer());
  CHECK_THROWS_AS(HalfInt::from_double(0.3), DomainError);
  CHECK_THROWS_AS(HalfInt::from_double(std::nan("")), DomainError);
  CHECK((HalfInt::from_twice(3) + HalfInt::from_twice(1)) == HalfInt::from_int(2));
  CHECK(HalfInt::from_twice(-3).value() == -1.5);
}

TEST_CASE("Dicke labels") {
  CHECK(is_valid_pair(HalfInt::from_twice(3), HalfInt::from_twice(-1)));
  CHECK_FALSE(is_valid_pair(HalfInt::from_twice(3), HalfInt::from_int(0)));
  CHECK_FALSE(is_valid_pair(HalfInt::from_int(1), HalfInt::from_int(2)));
  CHECK_THROWS_AS(require_valid_pair(HalfInt::from_int(1), HalfInt::from_twice(1)), DomainError);
  CHECK_THROWS_AS(require_valid_j(HalfInt::from_int(-1)), DomainError);

  const Irrep irrep(HalfInt::from_twice(3));
  CHECK(irrep.dim() == 4);
  CHECK(irrep.index_of(HalfInt::from_twice(-3)) == 0);
  CHECK(irrep.index_of(HalfInt::from_twice(1)) == 2);
  CHECK(irrep.mu_at(3) == HalfInt::from_twice(3));
  CHECK_THROWS_AS(irrep.index_of(HalfInt::from_twice(5)), DomainError);
}

TEST_CASE("spin one half generators") {
  const Su2Triple g = generators(HalfInt::from_twice(1));
  REQUIRE(g.plus.dim() == 2);
  CHECK(g.plus(0, 0) == cplx{0.0});
  CHECK(g.plus(0, 1) == cplx{0.0});
  CHECK(g.plus(1, 0) == cplx{1.0});
  CHECK(g.plus(1, 1) == cplx{0.0});
  CHECK(g.zero(0, 0) == cplx{-0.5});
  CHECK(g.zero(1, 1) == cplx{0.5});
  CHECK(max_abs_diff(g.minus, adjoint(g.plus)) == 0.0);
}

TEST_CASE("trivial irrep") {
  const Su2Triple g = generators(HalfInt::from_int(0));
  CHECK(g.plus.dim() == 1);
  CHECK(max_abs(g.plus) == 0.0);
  CHECK(max_abs(g.minus) == 0.0);
  CHECK(max_abs(g.zero) == 0.0);
}

TEST_CASE("matrix elements") {
  const HalfInt j = HalfInt::from_int(2);
  CHECK(raising_element_squared(j, HalfInt::from_int(0)) == 6);
  CHECK(raising_element_squared(j, j) == 0);
  CHECK(lowering_element_squared(j, -j) == 0);
  CHECK(raising_element(j, HalfInt::from_int(1)) == doctest::Approx(2.0));
  CHECK(lowering_element(j, HalfInt::from_int(1)) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("[J+, J-] = 2 J0 symbolically") {
  for (int tj = 0; tj <= 60; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    for (int tmu = -tj; tmu <= tj; tmu += 2) {
      const HalfInt mu = HalfInt::from_twice(tmu);
      CHECK(lowering_element_squared(j, mu) - raising_element_squared(j, mu) == tmu);
    }
  }
}

TEST_CASE("[J0, J+-] = +-J+- and Casimir") {
  for (int tj = 0; tj <= 40; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    CAPTURE(tj);
    const Su2Triple g = generators(j);
    CHECK(max_abs_diff(commutator(g.zero, g.plus), g.plus) <= 1e-13);
    CHECK(max_abs_diff(commutator(g.zero, g.minus), cplx{-1.0} * g.minus) <= 1e-13);
    const OperatorMatrix c = casimir(j);
    const double jj = j.value() * (j.value() + 1.0);
    CHECK(max_abs_diff(c, cplx{jj} * OperatorMatrix::identity(g.plus.dim())) == 0.0);
    CHECK(max_abs(commutator(c, g.plus)) <= 1e-12);
    CHECK(max_abs(commutator(c, g.minus)) <= 1e-12);
    CHECK(max_abs(commutator(c, g.zero)) <= 1e-12);
  }
  CHECK(casimir(HalfInt::from_twice(1))(0, 0) == cplx{0.75});
  CHECK(casimir(HalfInt::from_int(1))(2, 2) == cplx{2.0});
}

TEST_CASE("extremal states") {
  for (int tj = 0; tj <= 20; ++tj) {
    const Su2Triple g = generators(HalfInt::from_twice(tj));
    const std::size_t top = static_cast<std::size_t>(tj);
    for (std::size_t r = 0; r <= top; ++r) {
      CHECK(g.plus(r, top) == cplx{0.0});
      CHECK(g.minus(r, 0) == cplx{0.0});
    }
    OperatorMatrix p = g.plus;
    for (int k = 0; k < tj; ++k) p = p * g.plus;
    CHECK(max_abs(p) == 0.0);
  }
}
