#pragma once

#include <functional>
#include <vector>

#include "su2cs/operator_matrix.hpp"

namespace su2cs {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ln(n!) for n >= 0.
double log_factorial(int n);

/// Associated Laguerre polynomial L_n^m(x), evaluated by the three-term
/// recurrence in n:  (k+1) L_{k+1} = (2k+m+1-x) L_k - (k+m) L_{k-1}.
double assoc_laguerre(int n, int m, double x);

/// exp(A) by scaling and squaring of a truncated Taylor series. The series
/// order is picked from ||A/2^s||_1 so the remainder bound is below 1e-16
/// relative; the zero matrix maps to the identity exactly.
OperatorMatrix matrix_exp(const OperatorMatrix& a);

struct EigenSystem {
  std::vector<double> values;  ///< ascending
  OperatorMatrix vectors;      ///< unitary; column k pairs with values[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Throws
/// ContractError when max|A - A^dagger| > 1e-12.
EigenSystem hermitian_eigensystem(const OperatorMatrix& a);

/// Eigenvalues only (same algorithm, no vector accumulation).
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& a);

/// Gauss-Legendre nodes/weights on [lo, hi].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n_points, double lo, double hi);

inline constexpr double kDefaultRhoMax = 8.0;
inline constexpr int kDefaultRadialPoints = 256;

/// Approximates int_0^rho_max f(rho) rho d rho with n_points-node
/// Gauss-Legendre. Requires rho_max > 0 and n_points >= 16.
double radial_quadrature(const std::function<double(double)>& f, double rho_max = kDefaultRhoMax,
                         int n_points = kDefaultRadialPoints);

}  // namespace su2cs
