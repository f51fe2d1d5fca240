#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "su2cs/errors.hpp"
#include "su2cs/fock_oracle.hpp"
#include "su2cs/numerics.hpp"

using namespace su2cs;

namespace {

const OscillatorSpec kSpec{2.0, 1.0, 0.75};

}  // namespace

TEST_CASE("space enumeration") {
  const FockSpace s1 = build_space(1);
  REQUIRE(s1.dim() == 3);
  CHECK(s1.states()[0] == std::pair{0, 0});
  CHECK(s1.states()[1] == std::pair{0, 1});
  CHECK(s1.states()[2] == std::pair{1, 0});
  CHECK(build_space(5).dim() == 21);
  CHECK(build_space(0).dim() == 1);
  CHECK_THROWS_AS(build_space(-1), DomainError);

  const FockSpace s = build_space(9);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto [na, nb] = s.state_at(i);
    CHECK(s.index_of(na, nb) == i);
  }
  for (int n = 0; n <= 9; ++n) {
    CHECK(s.block_size(n) == static_cast<std::size_t>(n + 1));
    CHECK(s.total_of(s.block_offset(n)) == n);
  }
}

TEST_CASE("Hamiltonian matrix elements") {
  const FockSpace s = build_space(6);
  const OperatorMatrix h0 = build_hamiltonian({2.0, 0.5, 0.0}, s);
  CHECK(max_off_diagonal(h0) == 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto [na, nb] = s.state_at(i);
    CHECK(h0(i, i) == cplx{2.0 * na + 0.5 * nb});
  }

  const OperatorMatrix b1 = extract_block(build_hamiltonian(kSpec, s), s, 1);
  REQUIRE(b1.dim() == 2);
  CHECK(b1(0, 0) == cplx{1.0});
  CHECK(b1(1, 1) == cplx{2.0});
  CHECK(b1(0, 1) == cplx{0.75});
  CHECK(b1(1, 0) == cplx{0.75});
}

TEST_CASE("Hamiltonian commutes with the number operator exactly") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> om(0.1, 3.0), la(-2.0, 2.0);
  const FockSpace s = build_space(12);
  const JordanSchwinger js = jordan_schwinger(s);
  for (int k = 0; k < 10; ++k) {
    const OperatorMatrix h = build_hamiltonian({om(rng), om(rng), la(rng)}, s);
    CHECK(is_block_diagonal(h, s));
    CHECK(max_abs(commutator(h, js.number)) == 0.0);
  }
}

TEST_CASE("Jordan-Schwinger generators") {
  const FockSpace s = build_space(14);
  const JordanSchwinger js = jordan_schwinger(s);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto [na, nb] = s.state_at(i);
    CHECK(js.zero(i, i) == cplx{0.5 * (na - nb)});
    CHECK(js.number(i, i) == cplx{static_cast<double>(na + nb)});
  }
  for (int n = 0; n <= 14; ++n) {
    CAPTURE(n);
    const HalfInt j = HalfInt::from_twice(n);
    const Su2Triple g = generators(j);
    const OperatorMatrix p = extract_block(js.plus, s, n);
    const OperatorMatrix m = extract_block(js.minus, s, n);
    const OperatorMatrix z = extract_block(js.zero, s, n);
    CHECK(max_abs_diff(p, g.plus) <= 1e-12);
    CHECK(max_abs_diff(m, g.minus) <= 1e-12);
    CHECK(max_abs_diff(z, g.zero) == 0.0);
    // Casimir from the boson realization is N/2 (N/2 + 1)
    const double jj = j.value() * (j.value() + 1.0);
    CHECK(max_abs_diff(casimir(Su2Triple{p, m, z}), cplx{jj} * OperatorMatrix::identity(p.dim())) <= 1e-10);
  }
}

TEST_CASE("block spectrum") {
  const FockSpace s = build_space(20);
  const auto b = block_spectrum(kSpec, 1, s);
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b[0] - (1.5 - std::sqrt(13.0) / 4)) <= 1e-13);
  CHECK(std::abs(b[1] - (1.5 + std::sqrt(13.0) / 4)) <= 1e-13);
  CHECK_THROWS_AS(block_spectrum(kSpec, 21, s), DomainError);
  CHECK_THROWS_AS(block_spectrum(kSpec, -1, s), DomainError);

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> om(0.1, 3.0), la(-2.0, 2.0);
  for (int k = 0; k < 10; ++k) {
    const OscillatorSpec spec{om(rng), om(rng), la(rng)};
    const OperatorMatrix h = build_hamiltonian(spec, s);
    for (int n = 0; n <= 20; ++n) {
      const auto vals = block_spectrum(spec, n, s);
      const auto closed = spectrum(spec, HalfInt::from_twice(n));
      double trace = 0.0, sum = 0.0;
      const OperatorMatrix blk = extract_block(h, s, n);
      for (std::size_t i = 0; i < vals.size(); ++i) {
        CHECK(std::abs(vals[i] - closed[i].energy) <= 1e-8);
        trace += blk(i, i).real();
        sum += vals[i];
      }
      CHECK(std::abs(trace - sum) <= 1e-10);
    }
  }

  const OscillatorSpec dec{1.25, 0.5, 0.0};
  for (int n = 0; n <= 6; ++n) {
    std::vector<double> want;
    for (int na = 0; na <= n; ++na) want.push_back(1.25 * na + 0.5 * (n - na));
    std::sort(want.begin(), want.end());
    const auto got = block_spectrum(dec, n, s);
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-12);
  }
}

TEST_CASE("isotropic transformed generators") {
  const FockSpace s = build_space(12);
  const Su2Triple t = transformed_js_isotropic(s);
  const JordanSchwinger js = jordan_schwinger(s);
  CHECK(max_abs_diff(cplx{2.0} * t.zero, js.plus + js.minus) == 0.0);
  const CoherentParams p = coherent_params(std::numbers::pi / 2, 0.0);
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const OperatorMatrix ip = extract_block(t.plus, s, n);
    const OperatorMatrix im = extract_block(t.minus, s, n);
    const OperatorMatrix i0 = extract_block(t.zero, s, n);
    CHECK(max_abs_diff(commutator(ip, im), cplx{2.0} * i0) <= 1e-12);
    CHECK(max_abs_diff(commutator(i0, ip), ip) <= 1e-12);
    CHECK(max_abs_diff(commutator(i0, im), cplx{-1.0} * im) <= 1e-12);
    const HalfInt j = HalfInt::from_twice(n);
    const Su2Triple g = generators(j);
    const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
    CHECK(max_abs_diff(ip, d * g.plus * adjoint(d)) <= 1e-10);
    CHECK(max_abs_diff(im, d * g.minus * adjoint(d)) <= 1e-10);
    CHECK(max_abs_diff(i0, d * g.zero * adjoint(d)) <= 1e-10);
  }
}

TEST_CASE("propagation") {
  const FockSpace s = build_space(8);
  const OscillatorSpec spec{1.0, 1.0, 0.3};
  const HalfInt j = HalfInt::from_int(1);
  const HalfInt mu = HalfInt::from_int(0);
  const StateVector ps = pncs(j, mu, diagonalizing_params(spec));
  const FockState in = embed(s, ps);
  CHECK(std::abs(norm2(in.amplitudes) - 1.0) <= 1e-14);

  const FockState same = propagate(spec, s, in, 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(same.amplitudes[i] - in.amplitudes[i]) <= 1e-15);

  const FockState out = propagate(spec, s, in, 2.0);
  CHECK(std::abs(norm2(out.amplitudes) - 1.0) <= 1e-10);
  const cplx overlap = inner(in.amplitudes, out.amplitudes);
  CHECK(std::abs(overlap - evolve_phase(spec, j, mu, 2.0)) <= 1e-8);

  const FockState two = propagate(spec, s, propagate(spec, s, in, 0.7), 1.3);
  for (std::size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(two.amplitudes[i] - out.amplitudes[i]) <= 1e-9);

  FockState bad = in;
  bad.amplitudes[0] += 0.1;
  CHECK_THROWS_AS(propagate(spec, s, bad, 1.0), ContractError);
}

TEST_CASE("regression: the J0 coefficient of the block Hamiltonian is omega1 - omega2") {
  // the (omega1 + omega2) variant would shift every diagonal by 2 omega2 mu
  const FockSpace s = build_space(10);
  const OscillatorSpec spec{2.3, 0.6, 0.45};
  const OperatorMatrix h = build_hamiltonian(spec, s);
  for (int n = 0; n <= 10; ++n) CHECK(max_abs_diff(su2_hamiltonian(spec, HalfInt::from_twice(n)), extract_block(h, s, n)) <= 1e-14);
}

TEST_CASE("regression: paper-mode partition function uses the squared detuning and the lower energy") {
  const FockSpace s = build_space(12);
  for (const OscillatorSpec spec : {OscillatorSpec{2.3, 0.6, 0.45}, OscillatorSpec{0.4, 1.9, -0.8}}) {
    for (int n = 0; n <= 12; ++n) {
      const HalfInt j = HalfInt::from_twice(n);
      const double ground = block_spectrum(spec, n, s).front();
      const double kt = 1.7;
      const double z = partition_function(spec, j, {kt}, PartitionMode::paper);
      CHECK(std::abs(z - (n + 1) * std::exp(-ground / kt)) <= 1e-12 * z);
    }
  }
  // larger coupling lowers the ground energy paper mode reports
  const HalfInt j = HalfInt::from_int(3);
  CHECK(partition_function({1.0, 1.5, 0.9}, j, {1.0}, PartitionMode::paper) >
        partition_function({1.0, 1.5, 0.3}, j, {1.0}, PartitionMode::paper));
}
