#pragma once

#include <vector>

#include "su2cs/coherent.hpp"
#include "su2cs/su2_repr.hpp"

namespace su2cs {

/// 2D isotropic oscillator labels: principal N, angular momentum m,
/// radial n_rho = (N - |m|)/2.
struct QuantumNumbers {
  int N;
  int m;
  int n_rho;
};

struct GroupLabels {
  HalfInt j;
  HalfInt mu;
  int n_rho;
};

/// Throws DomainError unless N >= 0, |m| <= N and N - m is even.
QuantumNumbers quantum_numbers(int N, int m);

/// (N, m) -> (j = N/2, mu = m/2, n_rho = (N - |m|)/2).
GroupLabels map_quantum_numbers(int N, int m);

enum class WaveConvention {
  paper,       ///< 1/sqrt(pi) angular prefactor; L2 norm^2 = 2
  normalized,  ///< 1/sqrt(2 pi) angular prefactor; unit L2 norm
};

/// <rho, angle | N, m>. The radial factor uses |m| (rho^|m| and Laguerre
/// upper index |m|) while the phase e^{i m angle} keeps the sign of m.
cplx psi_nm(int N, int m, double rho, double angle, WaveConvention convention);

enum class LadderOp { a, a_dag, b, b_dag };

struct LadderResult {
  double coefficient;  ///< 0 signals annihilation
  int N;
  int m;
};

///   a     |N,m> = sqrt((N+m)/2)     |N-1, m-1>
///   a^dag |N,m> = sqrt((N+m)/2 + 1) |N+1, m+1>
///   b     |N,m> = sqrt((N-m)/2)     |N-1, m+1>
///   b^dag |N,m> = sqrt((N-m)/2 + 1) |N+1, m-1>
LadderResult polar_ladder_action(LadderOp op, int N, int m);

/// Position-space PNCS: sum over labels of pncs(j, mu, p) amplitudes times
/// psi_nm(2j, 2 mu', rho, angle, normalized). `angle` is the polar angle,
/// unrelated to the coherent-state phase p.phi.
cplx pncs_wavefunction(HalfInt j, HalfInt mu, const CoherentParams& p, double rho, double angle);

/// Same as above for a precomputed coefficient vector (mu-ascending).
cplx wavefunction_from_coefficients(const StateVector& coefficients, double rho, double angle);

struct PolarGrid {
  std::vector<double> rho_values;    ///< strictly increasing, > 0
  std::vector<double> angle_values;  ///< strictly increasing, in [0, 2 pi)
};

/// Throws DomainError when a grid axis is empty or violates its ordering.
void require_valid(const PolarGrid& grid);

/// rho_k = k rho_max / n_rho (k = 1..n_rho), angle_l = 2 pi l / n_angle.
/// Defaults: rho_max 8, 256 radial points, 128 angles.
PolarGrid uniform_grid(double rho_max = 8.0, int n_rho = 256, int n_angle = 128);

struct GridSample {
  double rho;
  double angle;
  double re;
  double im;
};

/// pncs_wavefunction over the grid product, rho-major.
std::vector<GridSample> grid_eval(HalfInt j, HalfInt mu, const CoherentParams& p, const PolarGrid& grid);

/// int |psi|^2 rho d rho d angle over a rho-major table from grid_eval.
/// In rho the origin (where the integrand vanishes) is added as a node;
/// uniform grids with an even point count use composite Simpson, any other
/// grid the trapezoid rule. In angle the periodic rectangle rule.
double grid_norm(const std::vector<GridSample>& table, const PolarGrid& grid);

/// <f|g> over the plane: Gauss-Legendre in rho on [0, rho_max], uniform
/// periodic rule in angle.
cplx polar_inner_product(int N1, int m1, int N2, int m2, WaveConvention convention, double rho_max = 8.0,
                         int n_rho = 256, int n_angle = 64);

}  // namespace su2cs
