#include "su2cs/wavefn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"

namespace su2cs {
namespace {

double radial_amplitude(const QuantumNumbers& q, double rho) {
  const int am = std::abs(q.m);
  const double sign = (q.n_rho % 2 == 0) ? 1.0 : -1.0;
  const double norm = std::sqrt(2.0 * std::exp(log_factorial(q.n_rho) - log_factorial(q.n_rho + am)));
  const double x = rho * rho;
  return sign * norm * std::pow(rho, am) * assoc_laguerre(q.n_rho, am, x) * std::exp(-0.5 * x);
}

double angular_prefactor(WaveConvention c) {
  return c == WaveConvention::paper ? 1.0 / std::sqrt(std::numbers::pi) : 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

void require_increasing(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw DomainError(std::string("PolarGrid: empty ") + what + " axis");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) throw DomainError(std::string("PolarGrid: ") + what + " values must be strictly increasing");
}

}  // namespace

QuantumNumbers quantum_numbers(int N, int m) {
  if (N < 0) throw DomainError("quantum numbers: N must be >= 0");
  if (std::abs(m) > N) throw DomainError("quantum numbers: |m| must be <= N");
  if ((N - m) % 2 != 0) throw DomainError("quantum numbers: N - m must be even");
  return {N, m, (N - std::abs(m)) / 2};
}

GroupLabels map_quantum_numbers(int N, int m) {
  const QuantumNumbers q = quantum_numbers(N, m);
  return {HalfInt::from_twice(N), HalfInt::from_twice(m), q.n_rho};
}

cplx psi_nm(int N, int m, double rho, double angle, WaveConvention convention) {
  const QuantumNumbers q = quantum_numbers(N, m);
  if (!(rho >= 0.0)) throw DomainError("psi_nm: rho must be >= 0");
  return std::polar(angular_prefactor(convention) * radial_amplitude(q, rho), m * angle);
}

LadderResult polar_ladder_action(LadderOp op, int N, int m) {
  quantum_numbers(N, m);
  switch (op) {
    case LadderOp::a: return {std::sqrt(0.5 * (N + m)), N - 1, m - 1};
    case LadderOp::a_dag: return {std::sqrt(0.5 * (N + m) + 1.0), N + 1, m + 1};
    case LadderOp::b: return {std::sqrt(0.5 * (N - m)), N - 1, m + 1};
    case LadderOp::b_dag: return {std::sqrt(0.5 * (N - m) + 1.0), N + 1, m - 1};
  }
  throw ContractError("polar_ladder_action: unknown operator");
}

cplx wavefunction_from_coefficients(const StateVector& coefficients, double rho, double angle) {
  const int N = coefficients.j.twice();
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < coefficients.amplitudes.size(); ++i) {
    const cplx c = coefficients.amplitudes[i];
    if (c == cplx{0.0, 0.0}) continue;
    const int m = 2 * static_cast<int>(i) - N;  // m = 2 mu'
    acc += c * psi_nm(N, m, rho, angle, WaveConvention::normalized);
  }
  return acc;
}

cplx pncs_wavefunction(HalfInt j, HalfInt mu, const CoherentParams& p, double rho, double angle) {
  return wavefunction_from_coefficients(pncs(j, mu, p), rho, angle);
}

void require_valid(const PolarGrid& grid) {
  require_increasing(grid.rho_values, "rho");
  require_increasing(grid.angle_values, "angle");
  if (!(grid.rho_values.front() > 0.0)) throw DomainError("PolarGrid: rho values must be > 0");
  if (grid.angle_values.front() < 0.0 || grid.angle_values.back() >= 2.0 * std::numbers::pi)
    throw DomainError("PolarGrid: angles must lie in [0, 2 pi)");
}

PolarGrid uniform_grid(double rho_max, int n_rho, int n_angle) {
  if (!(rho_max > 0.0) || n_rho < 1 || n_angle < 1) throw DomainError("uniform_grid: invalid grid parameters");
  PolarGrid g;
  g.rho_values.reserve(static_cast<std::size_t>(n_rho));
  for (int k = 1; k <= n_rho; ++k) g.rho_values.push_back(rho_max * k / n_rho);
  g.angle_values.reserve(static_cast<std::size_t>(n_angle));
  for (int l = 0; l < n_angle; ++l) g.angle_values.push_back(2.0 * std::numbers::pi * l / n_angle);
  return g;
}

std::vector<GridSample> grid_eval(HalfInt j, HalfInt mu, const CoherentParams& p, const PolarGrid& grid) {
  require_valid(grid);
  const StateVector coeffs = pncs(j, mu, p);
  std::vector<GridSample> out;
  out.reserve(grid.rho_values.size() * grid.angle_values.size());
  for (const double rho : grid.rho_values) {
    for (const double angle : grid.angle_values) {
      const cplx v = wavefunction_from_coefficients(coeffs, rho, angle);
      out.push_back({rho, angle, v.real(), v.imag()});
    }
  }
  return out;
}

double grid_norm(const std::vector<GridSample>& table, const PolarGrid& grid) {
  require_valid(grid);
  const std::size_t nr = grid.rho_values.size();
  const std::size_t na = grid.angle_values.size();
  if (table.size() != nr * na) throw ContractError("grid_norm: table does not match grid");

  std::vector<double> angle_weight(na);
  for (std::size_t l = 0; l < na; ++l) {
    const double next = (l + 1 < na) ? grid.angle_values[l + 1] : grid.angle_values[0] + 2.0 * std::numbers::pi;
    angle_weight[l] = next - grid.angle_values[l];
  }

  // f(rho) = rho * angular integral of |psi|^2, with f(0) = 0 at the origin
  std::vector<double> f(nr + 1, 0.0);
  for (std::size_t k = 0; k < nr; ++k) {
    double ring = 0.0;
    for (std::size_t l = 0; l < na; ++l) {
      const GridSample& s = table[k * na + l];
      ring += angle_weight[l] * (s.re * s.re + s.im * s.im);
    }
    f[k + 1] = grid.rho_values[k] * ring;
  }

  const double h = grid.rho_values[0];
  bool uniform = nr % 2 == 0;
  for (std::size_t k = 0; uniform && k < nr; ++k)
    uniform = std::abs(grid.rho_values[k] - h * static_cast<double>(k + 1)) <= 1e-12 * grid.rho_values.back();

  double total = 0.0;
  if (uniform) {
    for (std::size_t k = 1; k < nr; ++k) total += (k % 2 == 1 ? 4.0 : 2.0) * f[k];
    total = h / 3.0 * (f[0] + total + f[nr]);
  } else {
    double prev = 0.0;
    for (std::size_t k = 0; k < nr; ++k) {
      total += 0.5 * (grid.rho_values[k] - prev) * (f[k] + f[k + 1]);
      prev = grid.rho_values[k];
    }
  }
  return total;
}

cplx polar_inner_product(int N1, int m1, int N2, int m2, WaveConvention convention, double rho_max, int n_rho,
                         int n_angle) {
  if (n_angle < 1) throw DomainError("polar_inner_product: n_angle must be >= 1");
  if (!(rho_max > 0.0) || n_rho < 16) throw DomainError("polar_inner_product: invalid radial rule");
  quantum_numbers(N1, m1);
  quantum_numbers(N2, m2);
  const QuadratureRule rule = gauss_legendre(n_rho, 0.0, rho_max);
  const double dphi = 2.0 * std::numbers::pi / n_angle;
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double rho = rule.nodes[k];
    cplx ring{0.0, 0.0};
    for (int l = 0; l < n_angle; ++l) {
      const double angle = dphi * l;
      ring += std::conj(psi_nm(N1, m1, rho, angle, convention)) * psi_nm(N2, m2, rho, angle, convention);
    }
    acc += rule.weights[k] * rho * dphi * ring;
  }
  return acc;
}

}  // namespace su2cs
