#pragma once

#include <vector>

#include "su2cs/coherent.hpp"
#include "su2cs/operator_matrix.hpp"
#include "su2cs/su2_repr.hpp"

namespace su2cs {

/// H = omega1 a^dag a + omega2 b^dag b + lambda (a^dag b + b^dag a), hbar = 1.
struct OscillatorSpec {
  double omega1;
  double omega2;
  double lambda;
};

/// Throws DomainError unless both frequencies are > 0 and lambda is finite.
void require_valid(const OscillatorSpec& spec);

/// sqrt(4 lambda^2 + (omega1 - omega2)^2)
double splitting(const OscillatorSpec& spec);

struct SpectrumEntry {
  HalfInt j;
  HalfInt mu;
  double energy;
};

/// Temperature in units with k = 1.
struct ThermalInput {
  double temperature;
};

enum class PartitionMode {
  paper,  ///< (2j+1) exp(-E_min / kT) from the coherent-state trace
  exact,  ///< sum over mu of exp(-E(j, mu) / kT)
};

/// Fixed-N block of H on the (2j+1)-dim irrep, N acting as the scalar 2j:
///   (omega1+omega2) j I + (omega1-omega2) J0 + lambda (J+ + J-)
OperatorMatrix su2_hamiltonian(const OscillatorSpec& spec, HalfInt j);

/// Tilt parameters that remove the J+- terms.
///   lambda > 0:  theta = atan2(2 lambda, omega1 - omega2), phi = 0
///   lambda < 0:  theta = atan2(-2 lambda, omega1 - omega2), phi = pi
///   lambda = 0:  theta = 0 (already diagonal)
/// In every case theta lies in [0, pi) and the tilted diagonal carries the
/// + sign: E = (omega1+omega2) j + mu sqrt(4 lambda^2 + (omega1-omega2)^2),
/// except lambda = 0 with omega1 < omega2, where no tilt is applied and the
/// diagonal order is reversed.
/// For lambda != 0, delta, eps, zeta and eta are computed from the oscillator parameters
/// rather than from the rounded theta (delta = 2|lambda|/R, tan(theta/2) =
/// 2|lambda|/(R + omega1 - omega2), R the splitting), so they stay accurate
/// to a few ulps as theta approaches pi.
CoherentParams diagonalizing_params(const OscillatorSpec& spec);

/// The closed-form phi of the original derivation,
///   phi = -i ln[(-2 eps lambda + delta (omega1 - omega2)) / (2 (eps + 1) lambda)],
/// evaluated with the delta and eps of p. Only meaningful on the phi = 0
/// branch (lambda > 0), where at p = diagonalizing_params it reduces to 0.
cplx phi_closed_form(const OscillatorSpec& spec, const CoherentParams& p);

/// D^dagger H D assembled from the explicit J0, J+, J- coefficients of the
/// tilted Hamiltonian.
OperatorMatrix tilted_hamiltonian(const OscillatorSpec& spec, HalfInt j, const CoherentParams& p);

/// E(j, mu) = (omega1 + omega2) j + mu sqrt(4 lambda^2 + (omega1 - omega2)^2)
double energy(const OscillatorSpec& spec, HalfInt j, HalfInt mu);

/// E(j, mu) for mu = -j..j, ascending in mu.
std::vector<SpectrumEntry> spectrum(const OscillatorSpec& spec, HalfInt j);

double partition_function(const OscillatorSpec& spec, HalfInt j, ThermalInput th, PartitionMode mode);

/// exp(-i E(j, mu) t)
cplx evolve_phase(const OscillatorSpec& spec, HalfInt j, HalfInt mu, double t);

}  // namespace su2cs
