#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "su2cs/coherent.hpp"
#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"

using namespace su2cs;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

std::vector<cplx> column_of(const OperatorMatrix& m, HalfInt j, HalfInt mu) {
  return m.column(static_cast<std::size_t>(Irrep(j).index_of(mu)));
}

}  // namespace

TEST_CASE("coherent_params frozen values") {
  const CoherentParams id = coherent_params(0.0, 1.234);
  CHECK(id.xi == cplx{0.0});
  CHECK(id.zeta == cplx{0.0});
  CHECK(id.eta == 0.0);
  CHECK(id.delta == 0.0);
  CHECK(id.eps == 0.0);

  const CoherentParams q = coherent_params(kPi / 2, 0.0);
  CHECK(std::abs(q.zeta - cplx{-1.0}) <= 1e-15);
  CHECK(std::abs(q.xi - cplx{-kPi / 4}) <= 1e-15);
  CHECK(std::abs(q.eta - std::log(2.0)) <= 1e-15);
  CHECK(std::abs(q.delta - 1.0) <= 1e-15);
  CHECK(std::abs(q.eps + 0.5) <= 1e-15);

  CHECK_THROWS_AS(coherent_params(kPi, 0.0), DomainError);
  CHECK_THROWS_AS(coherent_params(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(coherent_params(0.3, std::nan("")), DomainError);
}

TEST_CASE("eta = ln(1 + |zeta|^2) over random parameters") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int k = 0; k < 200; ++k) {
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    CHECK(std::abs(p.eta - std::log1p(std::norm(p.zeta))) <= 1e-12 * std::max(1.0, p.eta));
  }
}

TEST_CASE("displacement matrix: identity, unitarity and both constructions agree") {
  CHECK(max_abs_diff(displacement_matrix(HalfInt::from_int(3), coherent_params(0.0, 0.4),
                                         DisplacementMethod::factored),
                     OperatorMatrix::identity(7)) == 0.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, 2.5), ph(0.0, 2 * kPi);
  for (int tj = 1; tj <= 16; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    const OperatorMatrix de = displacement_matrix(j, p, DisplacementMethod::exponential);
    const OperatorMatrix df = displacement_matrix(j, p, DisplacementMethod::factored);
    const auto id = OperatorMatrix::identity(de.dim());
    CHECK(max_abs_diff(de * adjoint(de), id) <= 1e-10);
    CHECK(max_abs_diff(df * adjoint(df), id) <= 1e-10);
    CHECK(max_abs_diff(de, df) <= 1e-11);
  }
}

TEST_CASE("PNCS at theta = 0 is the Dicke state") {
  const HalfInt j = HalfInt::from_twice(5);
  const StateVector s = pncs(j, HalfInt::from_twice(1), coherent_params(0.0, 2.0));
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) CHECK(s.amplitudes[i] == cplx{i == 3 ? 1.0 : 0.0});
}

TEST_CASE("PNCS equals the matrix-exponential column") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int tj = 0; tj <= 24; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
    for (int tmu = -tj; tmu <= tj; tmu += 2) {
      const HalfInt mu = HalfInt::from_twice(tmu);
      CAPTURE(tj);
      CAPTURE(tmu);
      CAPTURE(p.theta);
      CHECK(max_diff(pncs(j, mu, p).amplitudes, column_of(d, j, mu)) <= 1e-9);
    }
  }
}

TEST_CASE("PNCS uses extended precision when the alternating sum cancels") {
  const CoherentParams p = coherent_params(3.0, 0.7);
  SumPrecision used;
  const StateVector s = pncs(HalfInt::from_int(20), HalfInt::from_int(0), p, used);
  CHECK(used.precision_bits > 53);
  const OperatorMatrix d = displacement_matrix(HalfInt::from_int(20), p, DisplacementMethod::exponential);
  CHECK(max_diff(s.amplitudes, d.column(20)) <= 1e-9);
}

TEST_CASE("PNCS rejects invalid labels") {
  const CoherentParams p = coherent_params(0.5, 0.0);
  CHECK_THROWS_AS(pncs(HalfInt::from_int(1), HalfInt::from_twice(1), p), DomainError);
  CHECK_THROWS_AS(pncs(HalfInt::from_int(1), HalfInt::from_int(2), p), DomainError);
  CHECK_THROWS_AS(pncs(HalfInt::from_int(-1), HalfInt::from_int(-1), p), DomainError);
}

TEST_CASE("standard coherent state") {
  const StateVector half = scs(HalfInt::from_twice(1), coherent_params(kPi / 2, 0.0));
  CHECK(std::abs(std::abs(half.amplitudes[0]) - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::abs(std::abs(half.amplitudes[1]) - std::sqrt(0.5)) <= 1e-15);

  const StateVector ground = scs(HalfInt::from_int(2), coherent_params(0.0, 0.0));
  CHECK(ground.amplitudes[0] == cplx{1.0});

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> th(0.0, 3.0), ph(0.0, 2 * kPi);
  for (int tj = 0; tj <= 30; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    const StateVector s = scs(j, p);
    CHECK(std::abs(norm2(s.amplitudes) - 1.0) <= 1e-12);
    CHECK(max_diff(s.amplitudes, pncs(j, -j, p).amplitudes) <= 1e-12);
  }
}

TEST_CASE("PNCS of one irrep form an orthonormal basis") {
  const HalfInt j = HalfInt::from_twice(9);
  const CoherentParams p = coherent_params(1.9, 4.1);
  std::vector<StateVector> states;
  for (int tmu = -9; tmu <= 9; tmu += 2) states.push_back(pncs(j, HalfInt::from_twice(tmu), p));
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b) {
      const cplx ip = inner(states[a].amplitudes, states[b].amplitudes);
      CHECK(std::abs(ip - cplx{a == b ? 1.0 : 0.0}) <= 1e-10);
    }
}

TEST_CASE("transformed generators") {
  const HalfInt j = HalfInt::from_int(2);
  const Su2Triple g = generators(j);
  const Su2Triple t0 = transformed_generators(j, coherent_params(0.0, 0.0));
  CHECK(max_abs_diff(t0.plus, g.plus) == 0.0);
  CHECK(max_abs_diff(t0.minus, g.minus) == 0.0);
  CHECK(max_abs_diff(t0.zero, g.zero) == 0.0);
  const Su2Triple d0 = dagger_transformed_generators(j, coherent_params(0.0, 0.0));
  CHECK(max_abs_diff(d0.plus, g.plus) == 0.0);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> th(0.0, 3.0), ph(0.0, 2 * kPi);
  for (int tj = 0; tj <= 20; ++tj) {
    const HalfInt jj = HalfInt::from_twice(tj);
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    const Su2Triple gj = generators(jj);
    const OperatorMatrix d = displacement_matrix(jj, p, DisplacementMethod::exponential);
    const OperatorMatrix dd = adjoint(d);
    const Su2Triple t = transformed_generators(jj, p);
    const Su2Triple td = dagger_transformed_generators(jj, p);
    CAPTURE(tj);
    CHECK(max_abs_diff(t.plus, d * gj.plus * dd) <= 1e-10);
    CHECK(max_abs_diff(t.minus, d * gj.minus * dd) <= 1e-10);
    CHECK(max_abs_diff(t.zero, d * gj.zero * dd) <= 1e-10);
    CHECK(max_abs_diff(td.plus, dd * gj.plus * d) <= 1e-10);
    CHECK(max_abs_diff(td.minus, dd * gj.minus * d) <= 1e-10);
    CHECK(max_abs_diff(td.zero, dd * gj.zero * d) <= 1e-10);
    CHECK(max_abs_diff(commutator(t.zero, t.plus), t.plus) <= 1e-10);
    CHECK(max_abs_diff(commutator(t.zero, t.minus), cplx{-1.0} * t.minus) <= 1e-10);
    CHECK(max_abs_diff(commutator(t.plus, t.minus), cplx{2.0} * t.zero) <= 1e-10);
  }
}

TEST_CASE("ladder relations on PNCS") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> th(0.0, 3.0), ph(0.0, 2 * kPi);
  for (int tj = 1; tj <= 12; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const CoherentParams p = coherent_params(th(rng), ph(rng));
    const Su2Triple t = transformed_generators(j, p);
    for (int tmu = -tj; tmu <= tj; tmu += 2) {
      const HalfInt mu = HalfInt::from_twice(tmu);
      const auto s = pncs(j, mu, p).amplitudes;
      const auto i0 = su2cs::apply(t.zero, s);
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(i0[k] - mu.value() * s[k]) <= 1e-9);
      const auto ip = su2cs::apply(t.plus, s);
      const double up = raising_element(j, mu);
      const auto above = tmu < tj ? pncs(j, mu + HalfInt::from_int(1), p).amplitudes : std::vector<cplx>(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(ip[k] - up * above[k]) <= 1e-9);
      const auto im = su2cs::apply(t.minus, s);
      const double down = lowering_element(j, mu);
      const auto below = tmu > -tj ? pncs(j, mu - HalfInt::from_int(1), p).amplitudes : std::vector<cplx>(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(im[k] - down * below[k]) <= 1e-9);
    }
  }
}
