#include "su2cs/coupled_osc.hpp"

#include <cmath>
#include <numbers>

#include "su2cs/errors.hpp"

namespace su2cs {

void require_valid(const OscillatorSpec& spec) {
  if (!(spec.omega1 > 0.0) || !(spec.omega2 > 0.0) || !std::isfinite(spec.omega1) || !std::isfinite(spec.omega2))
    throw DomainError("oscillator frequencies must be finite and > 0");
  if (!std::isfinite(spec.lambda)) throw DomainError("coupling lambda must be finite");
}

double splitting(const OscillatorSpec& spec) {
  return std::hypot(2.0 * spec.lambda, spec.omega1 - spec.omega2);
}

OperatorMatrix su2_hamiltonian(const OscillatorSpec& spec, HalfInt j) {
  require_valid(spec);
  const Su2Triple g = generators(j);
  OperatorMatrix h = (0.5 * (spec.omega1 + spec.omega2) * j.twice()) * OperatorMatrix::identity(g.zero.dim());
  h += (spec.omega1 - spec.omega2) * g.zero;
  h += spec.lambda * (g.plus + g.minus);
  return h;
}

namespace {

// Overwrites delta, eps, zeta, eta with forms built from the oscillator
// parameters directly.
// Near theta = pi the rounding of theta would otherwise be amplified: cos
// theta + 1 and tan(theta/2) both lose about log2 tan^2(theta/2) bits.
CoherentParams tilt_from_spec(const OscillatorSpec& spec, double phi) {
  const double detuning = spec.omega1 - spec.omega2;
  const double coupling = std::abs(spec.lambda);
  const double r = splitting(spec);
  CoherentParams p = coherent_params(std::atan2(2.0 * coupling, detuning), phi);
  p.delta = 2.0 * coupling / r;
  double t;  // tan(theta/2)
  if (detuning > 0.0) {
    p.eps = -2.0 * coupling * coupling / (r * (r + detuning));
    t = 2.0 * coupling / (r + detuning);
  } else {
    p.eps = -(r - detuning) / (2.0 * r);
    t = (r - detuning) / (2.0 * coupling);
  }
  p.zeta = -t * std::polar(1.0, -phi);
  p.eta = std::log1p(t * t);
  return p;
}

}  // namespace

CoherentParams diagonalizing_params(const OscillatorSpec& spec) {
  require_valid(spec);
  if (spec.lambda > 0.0) return tilt_from_spec(spec, 0.0);
  if (spec.lambda < 0.0) return tilt_from_spec(spec, std::numbers::pi);
  return coherent_params(0.0, 0.0);
}

cplx phi_closed_form(const OscillatorSpec& spec, const CoherentParams& p) {
  const double delta = p.delta;
  const double eps = p.eps;
  const double ratio =
      (-2.0 * eps * spec.lambda + delta * (spec.omega1 - spec.omega2)) / (2.0 * (eps + 1.0) * spec.lambda);
  return cplx{0.0, -1.0} * std::log(cplx{ratio, 0.0});
}

OperatorMatrix tilted_hamiltonian(const OscillatorSpec& spec, HalfInt j, const CoherentParams& p) {
  require_valid(spec);
  const Su2Triple g = generators(j);
  const double detuning = spec.omega1 - spec.omega2;
  const double lambda = spec.lambda;
  const cplx u = p.xi_phase();  // xi / |xi|
  const cplx uc = std::conj(u);
  const double d = p.delta;
  const double e = p.eps;

  // (xi + xi*)/|xi| = 2 Re(u);  xi/xi* = u/uc
  const cplx c_zero = detuning * (2.0 * e + 1.0) - lambda * d * (u + uc);
  const cplx c_plus = 0.5 * detuning * d * u + lambda * e * (1.0 + u / uc) + lambda;
  const cplx c_minus = 0.5 * detuning * d * uc + lambda * e * (1.0 + uc / u) + lambda;

  OperatorMatrix h = (0.5 * (spec.omega1 + spec.omega2) * j.twice()) * OperatorMatrix::identity(g.zero.dim());
  h += c_zero * g.zero;
  h += c_plus * g.plus;
  h += c_minus * g.minus;
  return h;
}

double energy(const OscillatorSpec& spec, HalfInt j, HalfInt mu) {
  require_valid(spec);
  require_valid_pair(j, mu);
  return (spec.omega1 + spec.omega2) * j.value() + mu.value() * splitting(spec);
}

std::vector<SpectrumEntry> spectrum(const OscillatorSpec& spec, HalfInt j) {
  const Irrep irrep(j);
  std::vector<SpectrumEntry> out;
  out.reserve(static_cast<std::size_t>(irrep.dim()));
  for (int i = 0; i < irrep.dim(); ++i) {
    const HalfInt mu = irrep.mu_at(i);
    out.push_back({j, mu, energy(spec, j, mu)});
  }
  return out;
}

double partition_function(const OscillatorSpec& spec, HalfInt j, ThermalInput th, PartitionMode mode) {
  require_valid(spec);
  require_valid_j(j);
  if (!(th.temperature > 0.0) || std::isnan(th.temperature))
    throw DomainError("temperature must be > 0");
  const double kt = th.temperature;
  if (mode == PartitionMode::paper) {
    const double lowest = ((spec.omega1 + spec.omega2) - splitting(spec)) * j.value();
    return (j.twice() + 1) * std::exp(-lowest / kt);
  }
  double z = 0.0;
  for (const auto& entry : spectrum(spec, j)) z += std::exp(-entry.energy / kt);
  return z;
}

cplx evolve_phase(const OscillatorSpec& spec, HalfInt j, HalfInt mu, double t) {
  return std::polar(1.0, -energy(spec, j, mu) * t);
}

}  // namespace su2cs
