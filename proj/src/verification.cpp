#include "su2cs/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "su2cs/coherent.hpp"
#include "su2cs/coupled_osc.hpp"
#include "su2cs/errors.hpp"
#include "su2cs/fock_oracle.hpp"
#include "su2cs/kernels.hpp"
#include "su2cs/numerics.hpp"
#include "su2cs/wavefn.hpp"
#include "verification_oracles.hpp"

namespace su2cs {
namespace {

using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

HalfInt cap(HalfInt jmax, int limit) { return std::min(jmax, HalfInt::from_int(limit)); }

std::vector<HalfInt> j_range(HalfInt jmax) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= jmax.twice(); ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::vector<HalfInt> mu_range(HalfInt j) {
  std::vector<HalfInt> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

HalfInt random_j(Rng& rng, HalfInt jmax) { return HalfInt::from_twice(uniform_int(rng, 0, jmax.twice())); }
HalfInt random_mu(Rng& rng, HalfInt j) { return HalfInt::from_twice(-j.twice() + 2 * uniform_int(rng, 0, j.twice())); }

CoherentParams random_params(Rng& rng) {
  const double theta = uniform(rng, 0.0, kPi);
  return coherent_params(theta, uniform(rng, 0.0, 2.0 * kPi));
}

OscillatorSpec random_spec(Rng& rng, double lambda_lo, double lambda_hi) {
  const double w1 = uniform(rng, 0.1, 3.0);
  const double w2 = uniform(rng, 0.1, 3.0);
  return {w1, w2, uniform(rng, lambda_lo, lambda_hi)};
}

// lambda drawn from +-[0.05, 2]; both signs exercised.
OscillatorSpec random_coupled_spec(Rng& rng) {
  OscillatorSpec s = random_spec(rng, 0.05, 2.0);
  if (uniform_int(rng, 0, 1) == 1) s.lambda = -s.lambda;
  return s;
}

double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ContractError("max_diff: length mismatch");
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ContractError("max_diff: length mismatch");
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

std::size_t idx(HalfInt j, HalfInt mu) { return static_cast<std::size_t>(Irrep(j).index_of(mu)); }

OperatorMatrix random_hermitian(Rng& rng, std::size_t n) {
  OperatorMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = uniform(rng, -1.0, 1.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

OperatorMatrix random_anti_hermitian(Rng& rng, std::size_t n) { return cplx{0.0, 1.0} * random_hermitian(rng, n); }

std::vector<cplx> random_vector(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
  return v;
}

double identity_defect(const OperatorMatrix& m) { return max_abs_diff(m, OperatorMatrix::identity(m.dim())); }

std::vector<double> sorted_energies(const OscillatorSpec& spec, HalfInt j) {
  std::vector<double> e;
  for (const auto& entry : spectrum(spec, j)) e.push_back(entry.energy);
  std::sort(e.begin(), e.end());
  return e;
}

OperatorMatrix block_of(const OperatorMatrix& m, const FockSpace& space, int total) {
  return extract_block(m, space, total);
}

// ---- numerics -------------------------------------------------------------

double log_gamma_vs_factorial(const VerifyConfig&, std::uint64_t) {
  double e = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const double exact = oracle::log_factorial_exact(n);
    e = std::max(e, std::abs(log_gamma(n + 1.0) - exact) / std::max(1.0, std::abs(exact)));
  }
  return e;
}

double laguerre_recurrence(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const int n = uniform_int(rng, 1, 59);
    const int m = uniform_int(rng, 0, 40);
    const double x = uniform(rng, 0.0, 50.0);
    const double t1 = (n + 1) * assoc_laguerre(n + 1, m, x);
    const double t2 = (2 * n + m + 1 - x) * assoc_laguerre(n, m, x);
    const double t3 = (n + m) * assoc_laguerre(n - 1, m, x);
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale > 0.0) e = std::max(e, std::abs(t1 - t2 + t3) / scale);
  }
  return e;
}

// Error relative to the envelope C(n+m, n) e^{x/2} that bounds |L_n^m(x)|.
double laguerre_vs_series(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 300; ++k) {
    const int n = uniform_int(rng, 0, 30);
    const int m = uniform_int(rng, 0, 20);
    const double x = uniform(rng, 0.0, 30.0);
    const double envelope = std::exp(log_factorial(n + m) - log_factorial(n) - log_factorial(m) + 0.5 * x);
    e = std::max(e, std::abs(assoc_laguerre(n, m, x) - oracle::laguerre_series(n, m, x)) / envelope);
  }
  return e;
}

double matrix_exp_inverse(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OperatorMatrix a = random_anti_hermitian(rng, static_cast<std::size_t>(uniform_int(rng, 1, 41)));
    e = std::max(e, identity_defect(matrix_exp(a) * matrix_exp(cplx{-1.0, 0.0} * a)));
  }
  return e;
}

double matrix_exp_unitary(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OperatorMatrix u = matrix_exp(random_anti_hermitian(rng, static_cast<std::size_t>(uniform_int(rng, 1, 41))));
    e = std::max(e, identity_defect(u * adjoint(u)));
  }
  return e;
}

double matrix_exp_rotation(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double half = 0.5 * uniform(rng, -10.0, 10.0);
    const OperatorMatrix a(2, {0.0, -half, half, 0.0});
    const OperatorMatrix r(2, {std::cos(half), -std::sin(half), std::sin(half), std::cos(half)});
    e = std::max(e, max_abs_diff(matrix_exp(a), r));
  }
  return e;
}

double eigen_residual(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OperatorMatrix a = random_hermitian(rng, static_cast<std::size_t>(uniform_int(rng, 1, 41)));
    const EigenSystem es = hermitian_eigensystem(a);
    const OperatorMatrix d = OperatorMatrix::diagonal(std::span<const double>(es.values));
    e = std::max(e, max_abs_diff(a * es.vectors, es.vectors * d));
    e = std::max(e, max_abs_diff(a, es.vectors * d * adjoint(es.vectors)));
    if (!std::is_sorted(es.values.begin(), es.values.end())) return std::numeric_limits<double>::infinity();
  }
  return e;
}

double eigen_orthonormal(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const EigenSystem es = hermitian_eigensystem(random_hermitian(rng, static_cast<std::size_t>(uniform_int(rng, 1, 41))));
    e = std::max(e, identity_defect(adjoint(es.vectors) * es.vectors));
  }
  return e;
}

double eigen_unitary_invariance(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 41));
    const OperatorMatrix a = random_hermitian(rng, n);
    const OperatorMatrix u = matrix_exp(random_anti_hermitian(rng, n));
    OperatorMatrix b = u * a * adjoint(u);
    b = 0.5 * (b + adjoint(b));  // strip the rounding-level anti-Hermitian part
    e = std::max(e, max_diff(hermitian_eigenvalues(a), hermitian_eigenvalues(b)));
  }
  return e;
}

double radial_quadrature_analytic(const VerifyConfig&, std::uint64_t) {
  const double g = radial_quadrature([](double r) { return std::exp(-r * r); });
  const double h = radial_quadrature([](double r) { return 2.0 * std::exp(-r * r) * r * r; });
  const double z = radial_quadrature([](double) { return 0.0; });
  return std::max({std::abs(g - 0.5), std::abs(h - 1.0), std::abs(z)});
}

double simd_vs_scalar(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  const kernels::KernelTable& ref = kernels::scalar_kernels();
  double e = 0.0;
  for (const kernels::Isa isa : kernels::available_isas()) {
    const kernels::KernelTable& k = kernels::kernels_for(isa);
    for (std::size_t n = 0; n <= 67; ++n) {
      const std::vector<cplx> x = random_vector(rng, n);
      const std::vector<cplx> y = random_vector(rng, n);
      const cplx alpha{uniform(rng, -1, 1), uniform(rng, -1, 1)};
      const cplx b{uniform(rng, -1, 1), uniform(rng, -1, 1)};

      std::vector<cplx> y1 = y, y2 = y;
      ref.axpy(n, alpha, x.data(), y1.data());
      k.axpy(n, alpha, x.data(), y2.data());
      e = std::max(e, max_diff(y1, y2));

      e = std::max(e, std::abs(ref.dotc(n, x.data(), y.data()) - k.dotc(n, x.data(), y.data())) /
                          std::max(1.0, static_cast<double>(n)));

      std::vector<cplx> x1 = x, x2 = x;
      y1 = y;
      y2 = y;
      ref.rotate(n, alpha, b, -std::conj(b), std::conj(alpha), x1.data(), y1.data());
      k.rotate(n, alpha, b, -std::conj(b), std::conj(alpha), x2.data(), y2.data());
      e = std::max({e, max_diff(x1, x2), max_diff(y1, y2)});

      if (n >= 1 && n <= 24) {
        const std::vector<cplx> a = random_vector(rng, n * n);
        const std::vector<cplx> bm = random_vector(rng, n * n);
        std::vector<cplx> c1(n * n), c2(n * n);
        ref.gemm(n, a.data(), bm.data(), c1.data());
        k.gemm(n, a.data(), bm.data(), c2.data());
        e = std::max(e, max_diff(c1, c2) / static_cast<double>(n));
      }
    }
  }
  return e;
}

// ---- su2_repr -------------------------------------------------------------

double su2_weight_commutators(const VerifyConfig&, std::uint64_t) {
  double e = 0.0;
  for (const HalfInt j : j_range(HalfInt::from_int(25))) {
    const Su2Triple g = generators(j);
    e = std::max(e, max_abs_diff(commutator(g.zero, g.plus), g.plus));
    e = std::max(e, max_abs_diff(commutator(g.zero, g.minus), cplx{-1.0, 0.0} * g.minus));
  }
  return e;
}

// [J+, J-] = 2 J0 on the exact squared matrix elements: the diagonal of
// J+J- - J-J+ is (j+mu)(j-mu+1) - (j-mu)(j+mu+1), which must be 2 mu.
double su2_raising_lowering_exact(const VerifyConfig&, std::uint64_t) {
  double bad = 0.0;
  for (const HalfInt j : j_range(HalfInt::from_int(25)))
    for (const HalfInt mu : mu_range(j))
      if (lowering_element_squared(j, mu) - raising_element_squared(j, mu) != mu.twice()) bad += 1.0;
  return bad;
}

double su2_extremal_annihilation(const VerifyConfig&, std::uint64_t) {
  double e = 0.0;
  for (const HalfInt j : j_range(HalfInt::from_int(25))) {
    const Su2Triple g = generators(j);
    const std::size_t top = g.plus.dim() - 1;
    for (std::size_t r = 0; r <= top; ++r) e = std::max({e, std::abs(g.plus(r, top)), std::abs(g.minus(r, 0))});
  }
  return e;
}

double su2_nilpotent(const VerifyConfig&, std::uint64_t) {
  double e = 0.0;
  for (const HalfInt j : j_range(HalfInt::from_int(25))) {
    const Su2Triple g = generators(j);
    OperatorMatrix p = g.plus;
    for (int k = 1; k < j.twice() + 1; ++k) p = p * g.plus;
    e = std::max(e, max_abs(p));
  }
  return e;
}

double su2_casimir(const VerifyConfig&, std::uint64_t) {
  double e = 0.0;
  for (const HalfInt j : j_range(HalfInt::from_int(20))) {
    const Su2Triple g = generators(j);
    const OperatorMatrix c = casimir(j);
    const double jj = j.value() * (j.value() + 1.0);
    e = std::max(e, max_abs_diff(c, jj * OperatorMatrix::identity(c.dim())));
    for (const OperatorMatrix* op : {&g.plus, &g.minus, &g.zero}) e = std::max(e, max_abs(commutator(c, *op)));
  }
  return e;
}

// ---- coherent -------------------------------------------------------------

double params_identities(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 200; ++k) {
    const CoherentParams p = random_params(rng);
    e = std::max(e, std::abs(std::abs(p.xi) - 0.5 * p.theta));
    // cos|xi| with |xi| = theta/2: near theta = pi, recovering |xi| from the
    // rounded complex xi would perturb cos by tan(theta/2) ulps
    e = std::max(e, std::abs(p.eta + 2.0 * std::log(std::cos(0.5 * p.theta))));
    e = std::max(e, std::abs(p.eta - std::log(1.0 + std::norm(p.zeta))));
    e = std::max(e, std::abs(p.delta * p.delta + 4.0 * p.eps * (p.eps + 1.0)));
  }
  return e;
}

double pncs_vs_exponential(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    for (int k = 0; k < 20; ++k) {
      const CoherentParams p = random_params(rng);
      const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
      for (const HalfInt mu : mu_range(j)) e = std::max(e, max_diff(pncs(j, mu, p).amplitudes, d.column(idx(j, mu))));
    }
  }
  return e;
}

double factored_vs_exponential(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
    for (int k = 0; k < 5; ++k) {
      const CoherentParams p = random_params(rng);
      e = std::max(e, max_abs_diff(displacement_matrix(j, p, DisplacementMethod::factored),
                                   displacement_matrix(j, p, DisplacementMethod::exponential)));
    }
  }
  return e;
}

double displacement_unitary(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    const CoherentParams p = random_params(rng);
    for (const auto method : {DisplacementMethod::exponential, DisplacementMethod::factored}) {
      const OperatorMatrix d = displacement_matrix(j, p, method);
      e = std::max(e, identity_defect(d * adjoint(d)));
    }
  }
  return e;
}

double scs_vs_lowest_pncs(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    for (int k = 0; k < 5; ++k) {
      const CoherentParams p = random_params(rng);
      e = std::max(e, max_diff(scs(j, p).amplitudes, pncs(j, -j, p).amplitudes));
      e = std::max(e, std::abs(norm2(scs(j, p).amplitudes) - 1.0));
    }
  }
  return e;
}

double pncs_order_invariance(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    for (int k = 0; k < 2; ++k) {
      const CoherentParams p = random_params(rng);
      const HalfInt mu = random_mu(rng, j);
      e = std::max(e, max_diff(pncs(j, mu, p).amplitudes, oracle::pncs_swapped_unclamped(j, mu, p.theta, p.phi)));
    }
  }
  return e;
}

double pncs_orthonormal(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    const CoherentParams p = random_params(rng);
    std::vector<StateVector> states;
    for (const HalfInt mu : mu_range(j)) states.push_back(pncs(j, mu, p));
    for (std::size_t a = 0; a < states.size(); ++a)
      for (std::size_t b = 0; b < states.size(); ++b) {
        const cplx g = inner(states[a].amplitudes, states[b].amplitudes);
        e = std::max(e, std::abs(g - (a == b ? 1.0 : 0.0)));
      }
  }
  return e;
}

double pncs_casimir_expectation(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cfg.jmax)) {
    const OperatorMatrix c = casimir(j);
    const double jj = j.value() * (j.value() + 1.0);
    for (int k = 0; k < 3; ++k) {
      const CoherentParams p = random_params(rng);
      const StateVector s = pncs(j, random_mu(rng, j), p);
      e = std::max(e, std::abs(inner(s.amplitudes, su2cs::apply(c, s.amplitudes)) - jj));
    }
  }
  return e;
}

double transformed_vs_conjugation(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const CoherentParams p = random_params(rng);
    for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
      const Su2Triple g = generators(j);
      const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
      const OperatorMatrix dd = adjoint(d);
      const Su2Triple t = transformed_generators(j, p);
      e = std::max(e, max_abs_diff(t.plus, d * g.plus * dd));
      e = std::max(e, max_abs_diff(t.minus, d * g.minus * dd));
      e = std::max(e, max_abs_diff(t.zero, d * g.zero * dd));
    }
  }
  return e;
}

double dagger_transformed_vs_conjugation(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const CoherentParams p = random_params(rng);
    for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
      const Su2Triple g = generators(j);
      const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
      const OperatorMatrix dd = adjoint(d);
      const Su2Triple t = dagger_transformed_generators(j, p);
      e = std::max(e, max_abs_diff(t.plus, dd * g.plus * d));
      e = std::max(e, max_abs_diff(t.minus, dd * g.minus * d));
      e = std::max(e, max_abs_diff(t.zero, dd * g.zero * d));
    }
  }
  return e;
}

double transformed_commutators(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const CoherentParams p = random_params(rng);
    for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
      for (const Su2Triple& t : {transformed_generators(j, p), dagger_transformed_generators(j, p)}) {
        e = std::max(e, max_abs_diff(commutator(t.zero, t.plus), t.plus));
        e = std::max(e, max_abs_diff(commutator(t.zero, t.minus), cplx{-1.0, 0.0} * t.minus));
        e = std::max(e, max_abs_diff(commutator(t.plus, t.minus), 2.0 * t.zero));
      }
    }
  }
  return e;
}

double pncs_ladder_relations(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
    for (int k = 0; k < 5; ++k) {
      const CoherentParams p = random_params(rng);
      const Su2Triple t = transformed_generators(j, p);
      std::vector<StateVector> s;
      for (const HalfInt mu : mu_range(j)) s.push_back(pncs(j, mu, p));
      for (std::size_t i = 0; i < s.size(); ++i) {
        const HalfInt mu = HalfInt::from_twice(-j.twice() + 2 * static_cast<int>(i));
        std::vector<cplx> lhs = su2cs::apply(t.plus, s[i].amplitudes);
        std::vector<cplx> rhs(lhs.size());
        if (i + 1 < s.size())
          for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = raising_element(j, mu) * s[i + 1].amplitudes[r];
        e = std::max(e, max_diff(lhs, rhs));

        lhs = su2cs::apply(t.minus, s[i].amplitudes);
        std::fill(rhs.begin(), rhs.end(), cplx{});
        if (i > 0)
          for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = lowering_element(j, mu) * s[i - 1].amplitudes[r];
        e = std::max(e, max_diff(lhs, rhs));

        lhs = su2cs::apply(t.zero, s[i].amplitudes);
        for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = mu.value() * s[i].amplitudes[r];
        e = std::max(e, max_diff(lhs, rhs));
      }
    }
  }
  return e;
}

// ---- coupled_osc ----------------------------------------------------------

template <class F>
double over_positive_specs(const VerifyConfig& cfg, std::uint64_t seed, int n_specs, F&& f) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < n_specs; ++k) {
    const OscillatorSpec spec = random_spec(rng, 0.05, 2.0);
    const CoherentParams p = diagonalizing_params(spec);
    for (const HalfInt j : j_range(cfg.jmax)) e = std::max(e, f(spec, p, j));
  }
  return e;
}

double tilted_offdiagonal(const VerifyConfig& cfg, std::uint64_t seed) {
  return over_positive_specs(cfg, seed, 100, [](const OscillatorSpec& s, const CoherentParams& p, HalfInt j) {
    return max_off_diagonal(tilted_hamiltonian(s, j, p));
  });
}

double tilted_diagonal_energy(const VerifyConfig& cfg, std::uint64_t seed) {
  return over_positive_specs(cfg, seed, 100, [](const OscillatorSpec& s, const CoherentParams& p, HalfInt j) {
    const OperatorMatrix h = tilted_hamiltonian(s, j, p);
    double e = 0.0;
    for (const HalfInt mu : mu_range(j)) {
      const std::size_t i = idx(j, mu);
      e = std::max(e, std::abs(h(i, i) - energy(s, j, mu)));
    }
    return e;
  });
}

double phi_formula_zero(const VerifyConfig&, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OscillatorSpec spec = random_spec(rng, 0.05, 2.0);
    const CoherentParams p = diagonalizing_params(spec);
    e = std::max({e, std::abs(phi_closed_form(spec, p)), std::abs(p.phi)});
  }
  return e;
}

double negative_coupling_tilt(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OscillatorSpec spec = random_spec(rng, -2.0, -0.05);
    const CoherentParams p = diagonalizing_params(spec);
    for (const HalfInt j : j_range(cfg.jmax)) {
      const OperatorMatrix h = tilted_hamiltonian(spec, j, p);
      e = std::max(e, max_off_diagonal(h));
      for (const HalfInt mu : mu_range(j)) e = std::max(e, std::abs(h(idx(j, mu), idx(j, mu)) - energy(spec, j, mu)));
    }
  }
  return e;
}

double tilted_vs_conjugation(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OscillatorSpec spec = random_coupled_spec(rng);
    const CoherentParams p = random_params(rng);
    for (const HalfInt j : j_range(cap(cfg.jmax, 10))) {
      const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
      e = std::max(e, max_abs_diff(tilted_hamiltonian(spec, j, p), adjoint(d) * su2_hamiltonian(spec, j) * d));
    }
  }
  return e;
}

double tilted_spectrum_invariance(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OscillatorSpec spec = random_coupled_spec(rng);
    const CoherentParams p = random_params(rng);
    const HalfInt j = random_j(rng, cap(cfg.jmax, 10));
    OperatorMatrix t = tilted_hamiltonian(spec, j, p);
    t = 0.5 * (t + adjoint(t));
    e = std::max(e, max_diff(hermitian_eigenvalues(t), hermitian_eigenvalues(su2_hamiltonian(spec, j))));
  }
  return e;
}

double hamiltonian_spectrum_vs_closed_form(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OscillatorSpec spec = random_spec(rng, -2.0, 2.0);
    const HalfInt j = random_j(rng, cfg.jmax);
    e = std::max(e, max_diff(hermitian_eigenvalues(su2_hamiltonian(spec, j)), sorted_energies(spec, j)));
  }
  for (const HalfInt j : j_range(cfg.jmax)) {
    const OscillatorSpec spec = random_spec(rng, -2.0, 2.0);
    e = std::max(e, max_diff(hermitian_eigenvalues(su2_hamiltonian(spec, j)), sorted_energies(spec, j)));
  }
  return e;
}

double standard_cs_reduction(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OscillatorSpec s = random_spec(rng, -2.0, 2.0);
    const HalfInt j = random_j(rng, cfg.jmax);
    const double lowest =
        ((s.omega1 + s.omega2) - std::sqrt(4.0 * s.lambda * s.lambda + (s.omega1 - s.omega2) * (s.omega1 - s.omega2))) *
        j.value();
    e = std::max(e, std::abs(energy(s, j, -j) - lowest) / std::max(1.0, std::abs(lowest)));
  }
  return e;
}

double displacement_eigenvectors(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 10; ++k) {
    const OscillatorSpec spec = random_coupled_spec(rng);
    const CoherentParams p = diagonalizing_params(spec);
    for (const HalfInt j : j_range(cfg.jmax)) {
      const OperatorMatrix h = su2_hamiltonian(spec, j);
      const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
      for (const HalfInt mu : mu_range(j)) {
        const std::vector<cplx> v = d.column(idx(j, mu));
        std::vector<cplx> r = su2cs::apply(h, v);
        const double en = energy(spec, j, mu);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= en * v[i];
        e = std::max(e, norm2(r));
      }
    }
  }
  return e;
}

double pncs_coefficients_eigenvector(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double w = uniform(rng, 0.1, 3.0);
    double lambda = uniform(rng, 0.05, 2.0);
    if (uniform_int(rng, 0, 1) == 1) lambda = -lambda;
    const OscillatorSpec spec{w, w, lambda};
    const CoherentParams p = diagonalizing_params(spec);
    for (const HalfInt j : j_range(cfg.jmax)) {
      const OperatorMatrix h = su2_hamiltonian(spec, j);
      const HalfInt mu = random_mu(rng, j);
      const std::vector<cplx> v = pncs(j, mu, p).amplitudes;
      std::vector<cplx> r = su2cs::apply(h, v);
      const double en = energy(spec, j, mu);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= en * v[i];
      e = std::max(e, norm2(r));
    }
  }
  return e;
}

// ---- fock_oracle ----------------------------------------------------------

double fock_space_enumeration(const VerifyConfig& cfg, std::uint64_t) {
  double bad = 0.0;
  for (int n = 0; n <= cfg.nmax; ++n) {
    const FockSpace space(n);
    if (space.dim() != static_cast<std::size_t>((n + 1) * (n + 2) / 2)) bad += 1.0;
    for (int t = 0; t <= n; ++t)
      if (space.block_size(t) != static_cast<std::size_t>(t + 1)) bad += 1.0;
    for (std::size_t i = 0; i < space.dim(); ++i) {
      const auto [a, b] = space.state_at(i);
      if (space.index_of(a, b) != i) bad += 1.0;
    }
  }
  return bad;
}

double fock_block_diagonal(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(std::min(cfg.nmax, 12));
  const JordanSchwinger js = jordan_schwinger(space);
  double e = 0.0;
  for (int k = 0; k < 5; ++k) {
    const OperatorMatrix h = build_hamiltonian(random_spec(rng, -2.0, 2.0), space);
    if (!is_block_diagonal(h, space)) e = 1.0;
    e = std::max(e, max_abs(commutator(h, js.number)));
  }
  return e;
}

double fock_js_matches_generators(const VerifyConfig& cfg, std::uint64_t) {
  const FockSpace space(cfg.nmax);
  const JordanSchwinger js = jordan_schwinger(space);
  const OperatorMatrix comm = commutator(js.plus, js.minus) - 2.0 * js.zero;
  double e = 0.0;
  for (int n = 0; n <= cfg.nmax; ++n) {
    const Su2Triple g = generators(HalfInt::from_twice(n));
    e = std::max(e, max_abs_diff(block_of(js.plus, space, n), g.plus));
    e = std::max(e, max_abs_diff(block_of(js.minus, space, n), g.minus));
    e = std::max(e, max_abs_diff(block_of(js.zero, space, n), g.zero));
    if (n < cfg.nmax) e = std::max(e, max_abs(block_of(comm, space, n)));
  }
  return e;
}

double fock_js_casimir(const VerifyConfig& cfg, std::uint64_t) {
  const FockSpace space(cfg.nmax);
  const JordanSchwinger js = jordan_schwinger(space);
  const OperatorMatrix c = casimir(Su2Triple{js.plus, js.minus, js.zero});
  double e = 0.0;
  // J+J- and J-J+ conserve N, so truncation leaves every block exact
  for (int n = 0; n <= cfg.nmax; ++n) {
    const double half = 0.5 * n;
    const OperatorMatrix b = block_of(c, space, n);
    e = std::max(e, max_abs_diff(b, half * (half + 1.0) * OperatorMatrix::identity(b.dim())));
  }
  return e;
}

double fock_spectrum_vs_closed_form(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(cfg.nmax);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const OscillatorSpec spec = random_spec(rng, -2.0, 2.0);
    const OperatorMatrix h = build_hamiltonian(spec, space);
    for (int n = 0; n <= cfg.nmax; ++n)
      e = std::max(e, max_diff(hermitian_eigenvalues(block_of(h, space, n)), sorted_energies(spec, HalfInt::from_twice(n))));
  }
  return e;
}

double fock_decoupled_spectrum(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(cfg.nmax);
  double e = 0.0;
  for (int k = 0; k < 5; ++k) {
    const OscillatorSpec spec = random_spec(rng, 0.0, 0.0);
    for (int n = 0; n <= cfg.nmax; ++n) {
      std::vector<double> direct;
      for (int a = 0; a <= n; ++a) direct.push_back(spec.omega1 * a + spec.omega2 * (n - a));
      std::sort(direct.begin(), direct.end());
      e = std::max(e, max_diff(block_spectrum(spec, n, space), direct));
      e = std::max(e, max_diff(sorted_energies(spec, HalfInt::from_twice(n)), direct));
    }
  }
  return e;
}

double fock_isotropic_endpoints(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(cfg.nmax);
  double e = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double w = uniform(rng, 0.1, 3.0);
    const double lambda = uniform(rng, -2.0, 2.0);
    const OscillatorSpec spec{w, w, lambda};
    const OperatorMatrix h = build_hamiltonian(spec, space);
    for (int n = 0; n <= cfg.nmax; ++n) {
      const HalfInt j = HalfInt::from_twice(n);
      const std::vector<double> ev = hermitian_eigenvalues(block_of(h, space, n));
      const double lo = 2.0 * j.value() * (w - std::abs(lambda));
      const double hi = 2.0 * j.value() * (w + std::abs(lambda));
      e = std::max({e, std::abs(ev.front() - lo), std::abs(ev.back() - hi)});
      e = std::max({e, std::abs(energy(spec, j, -j) - lo), std::abs(energy(spec, j, j) - hi)});
    }
  }
  return e;
}

double fock_propagated_pncs_phase(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  const HalfInt jcap = std::min(cfg.jmax, HalfInt::from_twice(cfg.nmax));
  for (int k = 0; k < 20; ++k) {
    const OscillatorSpec spec = random_coupled_spec(rng);
    const HalfInt j = random_j(rng, jcap);
    const HalfInt mu = random_mu(rng, j);
    const double t = uniform(rng, 0.0, 10.0);
    const FockSpace space(j.twice());
    const FockState in = embed(space, pncs(j, mu, diagonalizing_params(spec)));
    const FockState out = propagate(spec, space, in, t);
    const cplx overlap = std::conj(evolve_phase(spec, j, mu, t)) * inner(in.amplitudes, out.amplitudes);
    e = std::max(e, std::abs(1.0 - overlap));
  }
  return e;
}

double evolve_phase_reference_point(const VerifyConfig&, std::uint64_t) {
  const OscillatorSpec spec{1.0, 1.0, 0.3};
  const HalfInt j = HalfInt::from_int(1);
  const HalfInt mu = HalfInt::from_int(0);
  const FockSpace space(2);
  const FockState in = embed(space, pncs(j, mu, diagonalizing_params(spec)));
  const FockState out = propagate(spec, space, in, 2.0);
  return std::abs(inner(in.amplitudes, out.amplitudes) - evolve_phase(spec, j, mu, 2.0));
}

FockState random_fock_state(Rng& rng, const FockSpace& space) {
  std::vector<cplx> v = random_vector(rng, space.dim());
  const double n = norm2(v);
  for (auto& x : v) x /= n;
  return {space.n_max(), std::move(v)};
}

double fock_propagation_additive(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(std::min(cfg.nmax, 8));
  double e = 0.0;
  for (int k = 0; k < 5; ++k) {
    const OscillatorSpec spec = random_spec(rng, -2.0, 2.0);
    const FockState psi = random_fock_state(rng, space);
    const double t1 = uniform(rng, -3.0, 3.0);
    const double t2 = uniform(rng, -3.0, 3.0);
    const FockState a = propagate(spec, space, propagate(spec, space, psi, t2), t1);
    const FockState b = propagate(spec, space, psi, t1 + t2);
    e = std::max(e, max_diff(a.amplitudes, b.amplitudes));
  }
  return e;
}

double fock_propagation_norm(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FockSpace space(std::min(cfg.nmax, 8));
  double e = 0.0;
  for (int k = 0; k < 5; ++k) {
    const FockState psi = random_fock_state(rng, space);
    const FockState out = propagate(random_spec(rng, -2.0, 2.0), space, psi, uniform(rng, -10.0, 10.0));
    e = std::max(e, std::abs(norm2(out.amplitudes) - 1.0));
  }
  return e;
}

double isotropic_generators_closure(const VerifyConfig& cfg, std::uint64_t) {
  const int nmax = std::min(cfg.nmax, 12);
  const FockSpace space(nmax);
  const Su2Triple t = transformed_js_isotropic(space);
  const OperatorMatrix c_pm = commutator(t.plus, t.minus) - 2.0 * t.zero;
  const OperatorMatrix c_0p = commutator(t.zero, t.plus) - t.plus;
  const OperatorMatrix c_0m = commutator(t.zero, t.minus) + t.minus;
  double e = 0.0;
  for (int n = 0; n <= nmax; ++n)
    for (const OperatorMatrix* c : {&c_pm, &c_0p, &c_0m}) e = std::max(e, max_abs(block_of(*c, space, n)));
  return e;
}

double isotropic_generators_vs_conjugation(const VerifyConfig& cfg, std::uint64_t) {
  const int nmax = std::min(cfg.nmax, 12);
  const FockSpace space(nmax);
  const Su2Triple t = transformed_js_isotropic(space);
  const CoherentParams p = coherent_params(kPi / 2.0, 0.0);
  double e = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const HalfInt j = HalfInt::from_twice(n);
    const Su2Triple g = generators(j);
    const OperatorMatrix d = displacement_matrix(j, p, DisplacementMethod::exponential);
    const OperatorMatrix dd = adjoint(d);
    e = std::max(e, max_abs_diff(block_of(t.plus, space, n), d * g.plus * dd));
    e = std::max(e, max_abs_diff(block_of(t.minus, space, n), d * g.minus * dd));
    e = std::max(e, max_abs_diff(block_of(t.zero, space, n), d * g.zero * dd));
  }
  return e;
}

// ---- partition function ---------------------------------------------------

double partition_paper_formula(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OscillatorSpec s = random_spec(rng, -2.0, 2.0);
    const HalfInt j = random_j(rng, cfg.jmax);
    const double kt = uniform(rng, 0.5, 10.0);
    const double r = std::sqrt(4.0 * s.lambda * s.lambda + (s.omega1 - s.omega2) * (s.omega1 - s.omega2));
    const double exponent = ((s.omega1 + s.omega2) - r) * j.value() / kt;
    const double expected = (2.0 * j.value() + 1.0) * std::exp(-exponent);
    // exp amplifies a one-ulp difference in the exponent by |exponent|, so
    // the relative error is measured per unit of that condition number
    const double rel = std::abs(partition_function(s, j, {kt}, PartitionMode::paper) - expected) / expected;
    e = std::max(e, rel / (1.0 + std::abs(exponent)));
  }
  return e;
}

double partition_degenerate_agreement(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double w = uniform(rng, 0.1, 3.0);
    const OscillatorSpec s{w, w, 0.0};
    const HalfInt j = random_j(rng, cfg.jmax);
    const ThermalInput th{uniform(rng, 0.5, 10.0)};
    const double exact = partition_function(s, j, th, PartitionMode::exact);
    e = std::max(e, std::abs(partition_function(s, j, th, PartitionMode::paper) - exact) / exact);
  }
  return e;
}

double partition_high_temperature(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  double e = 0.0;
  // Z/(2j+1) - 1 ~ -(omega1+omega2) j / kT at first order; with omega <= 3
  // and j <= 10 that is at most 6e-5, under the tolerance for every draw.
  const HalfInt jmax = std::min(cfg.jmax, HalfInt::from_int(10));
  for (int k = 0; k < 50; ++k) {
    const OscillatorSpec s = random_spec(rng, -2.0, 2.0);
    const HalfInt j = random_j(rng, jmax);
    const double dim = j.twice() + 1.0;
    e = std::max(e, std::abs(partition_function(s, j, {1e6}, PartitionMode::exact) - dim) / dim);
  }
  return e;
}

// ---- wavefn ---------------------------------------------------------------

struct PolarLabel {
  int N;
  int m;
};

std::vector<PolarLabel> polar_labels(int nmax) {
  std::vector<PolarLabel> out;
  for (int n = 0; n <= nmax; ++n)
    for (int m = -n; m <= n; m += 2) out.push_back({n, m});
  return out;
}

double polar_orthonormality(const VerifyConfig& cfg, std::uint64_t) {
  const std::vector<PolarLabel> labels = polar_labels(std::min(cfg.nmax, 8));
  const QuadratureRule rule = gauss_legendre(kDefaultRadialPoints, 0.0, kDefaultRhoMax);
  constexpr int kAngles = 64;
  const double dphi = 2.0 * kPi / kAngles;
  const std::size_t points = rule.nodes.size() * kAngles;

  // samples[label][point] with the quadrature weight folded in as sqrt
  std::vector<std::vector<cplx>> samples(labels.size(), std::vector<cplx>(points));
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double w = std::sqrt(rule.weights[k] * rule.nodes[k] * dphi);
      for (int l = 0; l < kAngles; ++l)
        samples[a][k * kAngles + static_cast<std::size_t>(l)] =
            w * psi_nm(labels[a].N, labels[a].m, rule.nodes[k], dphi * l, WaveConvention::normalized);
    }
  double e = 0.0;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a; b < labels.size(); ++b)
      e = std::max(e, std::abs(inner(samples[a], samples[b]) - (a == b ? 1.0 : 0.0)));
  return e;
}

double polar_paper_norm(const VerifyConfig& cfg, std::uint64_t) {
  double e = 0.0;
  for (const PolarLabel l : polar_labels(std::min(cfg.nmax, 8))) {
    // |psi|^2 does not depend on the angle, so the angular integral is 2 pi
    const double n2 = radial_quadrature([&](double r) {
      return 2.0 * kPi * std::norm(psi_nm(l.N, l.m, r, 0.0, WaveConvention::paper));
    });
    e = std::max(e, std::abs(n2 - 2.0));
  }
  return e;
}

// Relative error with a floor at 1e-6 of the largest magnitude in the
// sample, so points sitting on a node of the wavefunction do not dominate.
double wavefunction_vs_direct_sum(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const HalfInt jcap = cap(cfg.jmax, 5);
  std::vector<std::pair<cplx, cplx>> pairs;
  for (int k = 0; k < 100; ++k) {
    const HalfInt j = random_j(rng, jcap);
    const HalfInt mu = random_mu(rng, j);
    const CoherentParams p = random_params(rng);
    const double rho = uniform(rng, 0.0, 4.0);
    const double angle = uniform(rng, 0.0, 2.0 * kPi);
    pairs.emplace_back(pncs_wavefunction(j, mu, p, rho, angle),
                       oracle::pncs_wavefunction_direct(j, mu, p.theta, p.phi, rho, angle));
  }
  double peak = 0.0;
  for (const auto& [a, b] : pairs) peak = std::max(peak, std::abs(b));
  double e = 0.0;
  for (const auto& [a, b] : pairs) e = std::max(e, std::abs(a - b) / std::max(std::abs(b), 1e-6 * peak));
  return e;
}

double wavefunction_grid_norm(const VerifyConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const PolarGrid grid = uniform_grid();
  double e = 0.0;
  for (int k = 0; k < 3; ++k) {
    const HalfInt j = random_j(rng, cap(cfg.jmax, 3));
    const HalfInt mu = random_mu(rng, j);
    e = std::max(e, std::abs(grid_norm(grid_eval(j, mu, random_params(rng), grid), grid) - 1.0));
  }
  return e;
}

double quantum_number_map(const VerifyConfig& cfg, std::uint64_t) {
  double bad = 0.0;
  for (const PolarLabel l : polar_labels(cfg.nmax)) {
    const GroupLabels g = map_quantum_numbers(l.N, l.m);
    if (g.j.twice() != l.N || g.mu.twice() != l.m) bad += 1.0;
    if (HalfInt::from_int(g.n_rho) != g.j - (g.mu < HalfInt{} ? -g.mu : g.mu)) bad += 1.0;
  }
  for (const PolarLabel l : {PolarLabel{3, 0}, PolarLabel{1, 3}, PolarLabel{-1, 1}}) {
    try {
      map_quantum_numbers(l.N, l.m);
      bad += 1.0;
    } catch (const DomainError&) {
    }
  }
  return bad;
}

// Composes lowering then raising label rules; returns coefficient product
// and checks the label comes back.
double number_via_labels(LadderOp lower, LadderOp raise, int N, int m, double& bad) {
  const LadderResult a = polar_ladder_action(lower, N, m);
  if (a.coefficient == 0.0) return 0.0;
  const LadderResult b = polar_ladder_action(raise, a.N, a.m);
  if (b.N != N || b.m != m) bad += 1.0;
  return a.coefficient * b.coefficient;
}

double ladder_label_number(const VerifyConfig& cfg, std::uint64_t) {
  double e = 0.0;
  for (const PolarLabel l : polar_labels(cfg.nmax)) {
    double bad = 0.0;
    const double na = number_via_labels(LadderOp::a, LadderOp::a_dag, l.N, l.m, bad);
    const double nb = number_via_labels(LadderOp::b, LadderOp::b_dag, l.N, l.m, bad);
    e = std::max({e, bad, std::abs(na + nb - l.N)});
  }
  return e;
}

double ladder_label_j0(const VerifyConfig& cfg, std::uint64_t) {
  double e = 0.0;
  for (const PolarLabel l : polar_labels(cfg.nmax)) {
    double bad = 0.0;
    const double na = number_via_labels(LadderOp::a, LadderOp::a_dag, l.N, l.m, bad);
    const double nb = number_via_labels(LadderOp::b, LadderOp::b_dag, l.N, l.m, bad);
    e = std::max({e, bad, std::abs(0.5 * (na - nb) - 0.5 * l.m)});
  }
  return e;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (const unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<CheckSpec> build_registry() {
  return {
      {"numerics.log_gamma_vs_factorial", 0, 1e-12, log_gamma_vs_factorial},
      {"numerics.laguerre_recurrence", 0, 1e-10, laguerre_recurrence},
      {"numerics.laguerre_vs_series", 0, 1e-10, laguerre_vs_series},
      {"numerics.matrix_exp_inverse", 0, 1e-10, matrix_exp_inverse},
      {"numerics.matrix_exp_unitary", 0, 1e-10, matrix_exp_unitary},
      {"numerics.matrix_exp_rotation", 0, 1e-14, matrix_exp_rotation},
      {"numerics.eigen_residual", 0, 1e-9, eigen_residual},
      {"numerics.eigen_orthonormal", 0, 1e-10, eigen_orthonormal},
      {"numerics.eigen_unitary_invariance", 0, 1e-8, eigen_unitary_invariance},
      {"numerics.radial_quadrature_analytic", 0, 1e-8, radial_quadrature_analytic},
      {"numerics.simd_vs_scalar", 0, 1e-13, simd_vs_scalar},
      {"su2.weight_commutators", 0, 1e-13, su2_weight_commutators},
      {"su2.raising_lowering_exact", 0, 0.0, su2_raising_lowering_exact},
      {"su2.extremal_annihilation", 0, 0.0, su2_extremal_annihilation},
      {"su2.raising_nilpotent", 0, 0.0, su2_nilpotent},
      {"su2.casimir", 0, 1e-12, su2_casimir},
      {"coherent.params_identities", 0, 1e-12, params_identities},
      {"coherent.pncs_vs_exponential", 1, 1e-9, pncs_vs_exponential},
      {"coherent.factored_vs_exponential", 0, 1e-11, factored_vs_exponential},
      {"coherent.displacement_unitary", 0, 1e-10, displacement_unitary},
      {"coherent.scs_vs_lowest_pncs", 0, 1e-12, scs_vs_lowest_pncs},
      {"coherent.pncs_order_invariance", 0, 1e-10, pncs_order_invariance},
      {"coherent.pncs_orthonormal", 0, 1e-10, pncs_orthonormal},
      {"coherent.pncs_casimir_expectation", 0, 1e-9, pncs_casimir_expectation},
      {"coherent.transformed_vs_conjugation", 2, 1e-10, transformed_vs_conjugation},
      {"coherent.dagger_transformed_vs_conjugation", 2, 1e-10, dagger_transformed_vs_conjugation},
      {"coherent.transformed_commutators", 2, 1e-10, transformed_commutators},
      {"coherent.pncs_ladder_relations", 3, 1e-9, pncs_ladder_relations},
      {"coupled.tilted_offdiagonal", 4, 1e-10, tilted_offdiagonal},
      {"coupled.tilted_diagonal_energy", 4, 1e-10, tilted_diagonal_energy},
      {"coupled.phi_formula_zero", 4, 1e-12, phi_formula_zero},
      {"coupled.negative_coupling_tilt", 0, 1e-10, negative_coupling_tilt},
      {"coupled.tilted_vs_conjugation", 0, 1e-10, tilted_vs_conjugation},
      {"coupled.tilted_spectrum_invariance", 0, 1e-9, tilted_spectrum_invariance},
      {"coupled.hamiltonian_spectrum_vs_closed_form", 0, 1e-9, hamiltonian_spectrum_vs_closed_form},
      {"coupled.standard_cs_reduction", 0, 1e-12, standard_cs_reduction},
      {"fock.space_enumeration", 0, 0.0, fock_space_enumeration},
      {"fock.block_diagonal_exact", 0, 0.0, fock_block_diagonal},
      {"fock.js_matches_generators", 0, 1e-12, fock_js_matches_generators},
      {"fock.js_casimir", 0, 1e-10, fock_js_casimir},
      {"fock.spectrum_vs_closed_form", 5, 1e-8, fock_spectrum_vs_closed_form},
      {"fock.decoupled_spectrum", 5, 1e-8, fock_decoupled_spectrum},
      {"fock.isotropic_endpoints", 5, 1e-8, fock_isotropic_endpoints},
      {"coupled.displacement_eigenvectors", 6, 1e-9, displacement_eigenvectors},
      {"wavefn.pncs_coefficients_eigenvector", 0, 1e-9, pncs_coefficients_eigenvector},
      {"wavefn.polar_orthonormality", 7, 1e-5, polar_orthonormality},
      {"wavefn.paper_convention_norm", 7, 1e-5, polar_paper_norm},
      {"wavefn.expansion_vs_direct_sum", 7, 1e-8, wavefunction_vs_direct_sum},
      {"wavefn.grid_norm", 0, 1e-4, wavefunction_grid_norm},
      {"wavefn.quantum_number_map", 0, 0.0, quantum_number_map},
      {"wavefn.ladder_label_number", 0, 1e-12, ladder_label_number},
      {"wavefn.ladder_label_j0", 0, 1e-12, ladder_label_j0},
      {"fock.propagated_pncs_phase", 8, 1e-8, fock_propagated_pncs_phase},
      {"coupled.evolve_phase_reference_point", 8, 1e-8, evolve_phase_reference_point},
      {"fock.propagation_additive", 0, 1e-9, fock_propagation_additive},
      {"fock.propagation_norm", 0, 1e-10, fock_propagation_norm},
      {"partition.paper_formula", 9, 1e-14, partition_paper_formula},
      {"partition.degenerate_agreement", 9, 1e-12, partition_degenerate_agreement},
      {"partition.high_temperature", 9, 1e-4, partition_high_temperature},
      {"fock.isotropic_generators_closure", 10, 1e-12, isotropic_generators_closure},
      {"fock.isotropic_generators_vs_conjugation", 10, 1e-10, isotropic_generators_vs_conjugation},
  };
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

Check run_check(const CheckSpec& spec, const VerifyConfig& cfg) {
  Check c{spec.name, spec.group, 0.0, spec.tolerance, false, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.max_error = spec.run(cfg, mix_seed(cfg.seed, spec.name));
  } catch (const std::exception& e) {
    c.max_error = std::numeric_limits<double>::max();
    c.note = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!std::isfinite(c.max_error)) {
    if (c.note.empty()) c.note = "non-finite error";
    c.max_error = std::numeric_limits<double>::max();
  }
  c.passed = c.note.empty() && c.max_error <= c.tolerance;
  return c;
}

VerificationReport run_verification(const VerifyConfig& cfg, const std::function<bool(const CheckSpec&)>& filter) {
  require_valid_j(cfg.jmax);
  if (cfg.nmax < 0) throw DomainError("verify: nmax must be >= 0");
  VerificationReport report;
  report.overall = true;
  for (const CheckSpec& spec : check_registry()) {
    if (filter && !filter(spec)) continue;
    report.checks.push_back(run_check(spec, cfg));
    report.overall = report.overall && report.checks.back().passed;
  }
  return report;
}

}  // namespace su2cs
