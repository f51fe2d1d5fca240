#pragma once

#include <vector>

#include "su2cs/operator_matrix.hpp"
#include "su2cs/su2_repr.hpp"

namespace su2cs {

/// Displacement parameters. theta in [0, pi) and phi define everything else:
///   xi    = -(theta/2) e^{-i phi}
///   zeta  = -tan(theta/2) e^{-i phi}
///   eta   = ln(1 + |zeta|^2)            (= -2 ln cos|xi|)
///   delta = sin(2|xi|)
///   eps   = (cos(2|xi|) - 1) / 2
/// theta = pi is excluded: zeta diverges there and the normal-ordered form
/// breaks down, although exp(xi J+ - xi* J-) itself stays finite.
struct CoherentParams {
  double theta = 0.0;
  double phi = 0.0;
  cplx xi{0.0, 0.0};
  cplx zeta{0.0, 0.0};
  double eta = 0.0;
  double delta = 0.0;
  double eps = 0.0;

  /// xi / |xi| = -e^{-i phi}; its continuation at theta = 0, where every
  /// term it multiplies vanishes anyway.
  cplx xi_phase() const noexcept;
};

/// Throws DomainError unless 0 <= theta < pi and both are finite.
CoherentParams coherent_params(double theta, double phi);

/// A state in the (2j+1)-dimensional irrep, amplitudes mu-ascending.
struct StateVector {
  HalfInt j;
  std::vector<cplx> amplitudes;
};

enum class DisplacementMethod {
  exponential,  ///< matrix_exp(xi J+ - xi* J-)
  factored,     ///< exp(zeta J+) exp(eta J0) exp(-zeta* J-)
};

OperatorMatrix displacement_matrix(HalfInt j, const CoherentParams& p, DisplacementMethod method);

/// Working precision chosen for a normal-ordered sum. `precision_bits` is
/// 53 when plain doubles sufficed; `cancellation_bits` is log2 of the
/// largest sum of term magnitudes feeding a single output amplitude.
struct SumPrecision {
  int precision_bits = 53;
  double cancellation_bits = 0.0;
};

/// Perelomov number coherent state D(xi)|j, mu> from the closed-form double
/// sum over the normal-ordered expansion.
///
/// Iteration order: n runs over 0..j+mu (powers of -zeta* J-), and for each
/// n, s runs over 0..j-mu+n (powers of zeta J+); a term lands on the label
/// mu - n + s and is skipped if that label leaves [-j, j]. Terms are built
/// as log-magnitude + sign + phase. All terms feeding one label share the
/// phase e^{i(s-n) arg zeta}, so each label is a real alternating sum; when
/// the magnitudes feeding it exceed the result by more than 2^4 the sum is
/// redone in MPFR with enough extra bits to absorb the cancellation.
StateVector pncs(HalfInt j, HalfInt mu, const CoherentParams& p);
StateVector pncs(HalfInt j, HalfInt mu, const CoherentParams& p, SumPrecision& used);

/// Standard (atomic) coherent state D(xi)|j, -j> from the single binomial
/// sum  sqrt(C(2j, j+mu)) (1+|zeta|^2)^{-j} zeta^{j+mu}.
StateVector scs(HalfInt j, const CoherentParams& p);

/// I = D J D^dagger assembled from the explicit linear combinations of
/// J+, J-, J0. theta = 0 returns (J+, J-, J0).
Su2Triple transformed_generators(HalfInt j, const CoherentParams& p);

/// D^dagger J D assembled from the explicit linear combinations.
Su2Triple dagger_transformed_generators(HalfInt j, const CoherentParams& p);

}  // namespace su2cs
