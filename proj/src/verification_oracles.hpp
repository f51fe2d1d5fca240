#pragma once
// Independent reference evaluators used only by the verification suite.
// They share no arithmetic with the library paths they check: everything is
// evaluated in Boost cpp_bin_float from (theta, phi) directly.

#include <complex>
#include <vector>

#include "su2cs/su2_repr.hpp"

namespace su2cs::oracle {

/// ln(n!) from the exact 64-bit integer product, n <= 20.
double log_factorial_exact(int n);

/// L_n^m(x) from the explicit finite series
///   sum_i (-1)^i (n+m)! / ((n-i)! (m+i)! i!) x^i
/// in 200-bit arithmetic.
double laguerre_series(int n, int m, double x);

/// D(xi)|j, mu> by the normal-ordered double sum with the summation order
/// swapped (s outer, n inner) and both indices running over the full range
/// 0..2j. Terms whose factorial arguments go negative are zero.
std::vector<std::complex<double>> pncs_swapped_unclamped(HalfInt j, HalfInt mu, double theta, double phi);

/// Position-space PNCS as one double sum: normal-ordered coefficient times
/// the unit-normalized polar eigenfunction of label (2j, 2(mu - n + s)),
/// with the Laguerre factor from its explicit series. No intermediate
/// coefficient vector is formed.
std::complex<double> pncs_wavefunction_direct(HalfInt j, HalfInt mu, double theta, double phi, double rho,
                                              double angle);

}  // namespace su2cs::oracle
