#include "su2cs/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "su2cs/errors.hpp"
#include "su2cs/kernels.hpp"

namespace su2cs {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: x must be a finite positive number");
  // std::lgamma writes signgam; the argument is positive so the sign is +1.
  return std::lgamma(x);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: n must be >= 0, got " + std::to_string(n));
  if (n < 2) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double assoc_laguerre(int n, int m, double x) {
  if (n < 0 || m < 0) throw DomainError("assoc_laguerre: n and m must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + m - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + m + 1.0 - x) * curr - (k + m) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

OperatorMatrix matrix_exp(const OperatorMatrix& a) {
  if (!all_finite(a)) throw DomainError("matrix_exp: non-finite entry");
  const std::size_t n = a.dim();
  const double norm = one_norm(a);
  if (norm == 0.0) return OperatorMatrix::identity(n);

  // Scale so that ||X||_1 <= 1/2.
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  const OperatorMatrix x = cplx{scale, 0.0} * a;
  const double xn = norm * scale;

  // Smallest order m with  xn^(m+1)/(m+1)! * e^xn <= 1e-17.
  int order = 1;
  double term = xn * xn / 2.0;
  while (term * std::exp(xn) > 1e-17 && order < 40) {
    ++order;
    term *= xn / (order + 1);
  }

  // Horner: I + X/1 (I + X/2 (I + ... (I + X/m)))
  const OperatorMatrix eye = OperatorMatrix::identity(n);
  OperatorMatrix r = eye + cplx{1.0 / order, 0.0} * x;
  for (int k = order - 1; k >= 1; --k) {
    r = x * r;
    r *= cplx{1.0 / k, 0.0};
    r += eye;
  }
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

// Diagonalizes h in place. When `rows` is non-null it accumulates V^T: row k
// of *rows is eigenvector k (before sorting).
void jacobi_sweeps(OperatorMatrix& h, OperatorMatrix* rows) {
  const std::size_t n = h.dim();
  const auto& k = kernels::active();
  const double target = kOffDiagonalTarget * frobenius_norm(h);

  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) off += std::norm(h(r, c));
    if (std::sqrt(off) <= target) return;
    if (sweep == kMaxSweeps) throw std::runtime_error("hermitian_eigensystem: Jacobi did not converge");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx c = h(p, q);
        const double abs_c = std::abs(c);
        if (abs_c == 0.0) continue;
        const cplx phase = c / abs_c;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * abs_c);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;

        // H <- G^dagger H on rows p, q; Hermiticity then fixes columns p, q.
        k.rotate(n, cs, -sn * phase, sn, cs * phase, h.row(p).data(), h.row(q).data());
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          h(i, p) = std::conj(h(p, i));
          h(i, q) = std::conj(h(q, i));
        }
        h(p, p) = app - t * abs_c;
        h(q, q) = aqq + t * abs_c;
        h(p, q) = 0.0;
        h(q, p) = 0.0;

        if (rows != nullptr) {
          k.rotate(n, cs, -sn * std::conj(phase), sn, cs * std::conj(phase), rows->row(p).data(),
                   rows->row(q).data());
        }
      }
    }
  }
}

OperatorMatrix hermitian_part(const OperatorMatrix& a) {
  if (!all_finite(a)) throw DomainError("hermitian_eigensystem: non-finite entry");
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTolerance)
    throw ContractError("hermitian_eigensystem: input is not Hermitian (defect " + std::to_string(defect) + ")");
  OperatorMatrix h = a + adjoint(a);
  h *= 0.5;
  return h;
}

}  // namespace

EigenSystem hermitian_eigensystem(const OperatorMatrix& a) {
  OperatorMatrix h = hermitian_part(a);
  const std::size_t n = h.dim();
  OperatorMatrix rows = OperatorMatrix::identity(n);
  jacobi_sweeps(h, &rows);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return h(x, x).real() < h(y, y).real(); });

  EigenSystem out{std::vector<double>(n), OperatorMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = h(order[col], order[col]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = rows(order[col], r);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& a) {
  OperatorMatrix h = hermitian_part(a);
  jacobi_sweeps(h, nullptr);
  std::vector<double> values(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) values[i] = h(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

QuadratureRule gauss_legendre(int n_points, double lo, double hi) {
  if (n_points < 1) throw DomainError("gauss_legendre: n_points must be >= 1");
  if (!(hi > lo)) throw DomainError("gauss_legendre: empty interval");
  QuadratureRule rule{std::vector<double>(n_points), std::vector<double>(n_points)};
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int n = n_points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

double radial_quadrature(const std::function<double(double)>& f, double rho_max, int n_points) {
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw DomainError("radial_quadrature: rho_max must be > 0");
  if (n_points < 16) throw DomainError("radial_quadrature: n_points must be >= 16");
  const QuadratureRule rule = gauss_legendre(n_points, 0.0, rho_max);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]) * rule.nodes[i];
  return acc;
}

}  // namespace su2cs
