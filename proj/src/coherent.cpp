#include "su2cs/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "multiprecision.hpp"
#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"

namespace su2cs {
namespace {

using detail::MpReal;

// Sums whose term magnitudes stay below 2^4 are done in double; beyond that
// the error bound (sum of |terms|) * 1e-14 would start to matter.
constexpr double kDoubleCancellationBits = 4.0;
constexpr int kGuardBits = 64;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

mpfr_prec_t working_bits(double cancellation_bits) {
  return static_cast<mpfr_prec_t>(kGuardBits + std::max(0, static_cast<int>(std::ceil(cancellation_bits))));
}

// tan(theta/2) and sqrt(1 + tan^2(theta/2)) evaluated at working precision
// from the same theta, so the cancelling terms stay mutually consistent.
struct MpZeta {
  MpReal abs_zeta;
  MpReal root_weight;  // sqrt(1+|zeta|^2) = e^{eta/2}
};

MpZeta mp_zeta(double theta, mpfr_prec_t bits) {
  MpReal half(bits, theta);
  half /= 2L;
  MpReal tz = tan(half);
  MpReal w = MpReal(bits, 1.0) + tz * tz;
  return {tz, sqrt(w)};
}

std::vector<MpReal> mp_factorials(mpfr_prec_t bits, int upto) {
  std::vector<MpReal> f;
  f.reserve(static_cast<std::size_t>(upto) + 1);
  for (int k = 0; k <= upto; ++k) f.push_back(MpReal::factorial(bits, static_cast<unsigned long>(k)));
  return f;
}

StateVector basis_state(HalfInt j, HalfInt mu) {
  const Irrep irrep(j);
  StateVector out{j, std::vector<cplx>(static_cast<std::size_t>(irrep.dim()))};
  out.amplitudes[static_cast<std::size_t>(irrep.index_of(mu))] = 1.0;
  return out;
}

// arg zeta; zeta = tan(theta/2) * (xi/|xi|) with tan(theta/2) >= 0
double zeta_arg(const CoherentParams& p) { return std::arg(p.xi_phase()); }

// ---------------------------------------------------------------------------
// Normal-ordered displacement, factored form.
//
// With zeta = |zeta| e^{i alpha} and Phi = diag(e^{i alpha k}),
//   exp(zeta J+) exp(eta J0) exp(-zeta* J-) = Phi L E U Phi^{-1}
// where L = exp(|zeta| J+), E = exp(eta J0), U = exp(-|zeta| J-) are real.
// L and U are finite series because J+- are nilpotent; each power of J+
// has a single nonzero per column, so L(k+r, k) is one product.

struct LogFactors {
  std::vector<std::vector<double>> log_lower;  // log L(i, k), i >= k
  std::vector<std::vector<double>> log_upper;  // log |U(k, m)|, k <= m; sign (-1)^(m-k)
  std::vector<double> log_diag;                // eta * mu_k
};

LogFactors log_factors(HalfInt j, const CoherentParams& p) {
  const Irrep irrep(j);
  const int dim = irrep.dim();
  const double lz = std::log(std::tan(0.5 * p.theta));
  LogFactors f;
  f.log_lower.assign(dim, std::vector<double>(dim, kNegInf));
  f.log_upper.assign(dim, std::vector<double>(dim, kNegInf));
  f.log_diag.resize(dim);
  for (int k = 0; k < dim; ++k) {
    f.log_diag[k] = p.eta * irrep.mu_at(k).value();
    f.log_lower[k][k] = 0.0;
    for (int r = 1; k + r < dim; ++r) {
      const double e = raising_element(j, irrep.mu_at(k + r - 1));
      f.log_lower[k + r][k] = f.log_lower[k + r - 1][k] + lz + std::log(e) - std::log(r);
    }
    f.log_upper[k][k] = 0.0;
    for (int r = 1; k - r >= 0; ++r) {
      const double e = lowering_element(j, irrep.mu_at(k - r + 1));
      f.log_upper[k - r][k] = f.log_upper[k - r + 1][k] + lz + std::log(e) - std::log(r);
    }
  }
  return f;
}

OperatorMatrix factored_double(HalfInt j, const CoherentParams& p, const LogFactors& f) {
  const auto dim = static_cast<std::size_t>(j.twice() + 1);
  const double alpha = zeta_arg(p);
  OperatorMatrix lower(dim), diag(dim), upper(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    diag(i, i) = std::exp(f.log_diag[i]);
    for (std::size_t k = 0; k <= i; ++k)
      lower(i, k) = std::polar(std::exp(f.log_lower[i][k]), alpha * static_cast<double>(i - k));
    for (std::size_t m = i; m < dim; ++m) {
      const auto r = m - i;
      const double sign = (r % 2 == 0) ? 1.0 : -1.0;
      upper(i, m) = std::polar(sign * std::exp(f.log_upper[i][m]), -alpha * static_cast<double>(r));
    }
  }
  return lower * diag * upper;
}

OperatorMatrix factored_multiprecision(HalfInt j, const CoherentParams& p, mpfr_prec_t bits) {
  const Irrep irrep(j);
  const int dim = irrep.dim();
  const MpZeta z = mp_zeta(p.theta, bits);

  std::vector<std::vector<MpReal>> lower(dim, std::vector<MpReal>(dim, MpReal(bits)));
  std::vector<std::vector<MpReal>> upper(dim, std::vector<MpReal>(dim, MpReal(bits)));
  std::vector<MpReal> diag;
  diag.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    diag.push_back(pow(z.root_weight, irrep.mu_at(k).twice()));
    lower[k][k] = MpReal(bits, 1.0);
    for (int r = 1; k + r < dim; ++r) {
      const HalfInt mu = irrep.mu_at(k + r - 1);
      // (j-mu)(j+mu+1) = (2j-2mu)(2j+2mu+2)/4 as an exact integer ratio
      MpReal e(bits, static_cast<double>(j.twice() - mu.twice()) * (j.twice() + mu.twice() + 2));
      e = sqrt(e);
      e /= 2L;
      lower[k + r][k] = lower[k + r - 1][k] * z.abs_zeta * e;
      lower[k + r][k] /= static_cast<long>(r);
    }
    upper[k][k] = MpReal(bits, 1.0);
    for (int r = 1; k - r >= 0; ++r) {
      const HalfInt mu = irrep.mu_at(k - r + 1);
      MpReal e(bits, static_cast<double>(j.twice() + mu.twice()) * (j.twice() - mu.twice() + 2));
      e = sqrt(e);
      e /= 2L;
      upper[k - r][k] = upper[k - r + 1][k] * z.abs_zeta * e;
      upper[k - r][k] /= -static_cast<long>(r);
    }
  }

  const double alpha = zeta_arg(p);
  OperatorMatrix out(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int m = 0; m < dim; ++m) {
      MpReal acc(bits);
      for (int k = 0; k <= std::min(i, m); ++k) acc += lower[i][k] * diag[k] * upper[k][m];
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(m)) = std::polar(acc.to_double(), alpha * (i - m));
    }
  }
  return out;
}

OperatorMatrix factored_displacement(HalfInt j, const CoherentParams& p) {
  const auto dim = static_cast<std::size_t>(j.twice() + 1);
  if (p.theta == 0.0) return OperatorMatrix::identity(dim);
  const LogFactors f = log_factors(j, p);

  double worst = kNegInf;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t m = 0; m < dim; ++m) {
      double acc = kNegInf;
      for (std::size_t k = 0; k <= std::min(i, m); ++k)
        acc = log_add(acc, f.log_lower[i][k] + f.log_diag[k] + f.log_upper[k][m]);
      worst = std::max(worst, acc);
    }
  }
  const double bits = worst / std::numbers::ln2;
  if (bits <= kDoubleCancellationBits) return factored_double(j, p, f);
  return factored_multiprecision(j, p, working_bits(bits));
}

// ---------------------------------------------------------------------------
// Closed-form PNCS coefficients.

struct PncsLayout {
  int j2;  // 2j
  int a;   // j + mu
  int b;   // j - mu
  double mu;
};

template <typename Visit>
void for_each_term(const PncsLayout& l, Visit&& visit) {
  for (int n = 0; n <= l.a; ++n) {
    for (int s = 0; s <= l.b + n; ++s) {
      const int label = l.a - n + s;  // basis index of mu - n + s
      if (label < 0 || label > l.j2) continue;
      visit(n, s, label);
    }
  }
}

StateVector pncs_multiprecision(HalfInt j, const PncsLayout& l, const CoherentParams& p, mpfr_prec_t bits) {
  const MpZeta z = mp_zeta(p.theta, bits);
  const auto fact = mp_factorials(bits, l.j2);

  std::vector<MpReal> zeta_pow;
  zeta_pow.emplace_back(bits, 1.0);
  for (int k = 1; k <= 2 * l.a + l.b; ++k) zeta_pow.push_back(zeta_pow.back() * z.abs_zeta);
  std::vector<MpReal> weight_pow;  // e^{eta (mu - n)} = sqrt(1+|zeta|^2)^{2mu - 2n}
  for (int n = 0; n <= l.a; ++n) weight_pow.push_back(pow(z.root_weight, (l.a - l.b) - 2 * n));
  std::vector<MpReal> label_root;
  for (int i = 0; i <= l.j2; ++i) label_root.push_back(sqrt(fact[l.a] * fact[i] / (fact[l.b] * fact[l.j2 - i])));

  std::vector<MpReal> sums(static_cast<std::size_t>(l.j2) + 1, MpReal(bits));
  for_each_term(l, [&](int n, int s, int label) {
    MpReal t = zeta_pow[n + s] * weight_pow[n] * fact[l.b + n];
    t /= fact[n] * fact[s] * fact[l.a - n];
    t *= label_root[label];
    if (n % 2 == 0) {
      sums[label] += t;
    } else {
      sums[label] -= t;
    }
  });

  const double alpha = zeta_arg(p);
  StateVector out{j, std::vector<cplx>(sums.size())};
  for (int i = 0; i <= l.j2; ++i) out.amplitudes[i] = std::polar(sums[i].to_double(), alpha * (i - l.a));
  return out;
}

}  // namespace

cplx CoherentParams::xi_phase() const noexcept { return -std::polar(1.0, -phi); }

CoherentParams coherent_params(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw DomainError("coherent_params: non-finite input");
  if (theta < 0.0 || theta >= std::numbers::pi)
    throw DomainError("coherent_params: theta must lie in [0, pi), got " + std::to_string(theta));
  CoherentParams p;
  p.theta = theta;
  p.phi = phi;
  const cplx phase = -std::polar(1.0, -phi);
  p.xi = 0.5 * theta * phase;
  const double t = std::tan(0.5 * theta);
  p.zeta = t * phase;
  p.eta = std::log1p(t * t);
  p.delta = std::sin(theta);
  p.eps = 0.5 * (std::cos(theta) - 1.0);
  return p;
}

OperatorMatrix displacement_matrix(HalfInt j, const CoherentParams& p, DisplacementMethod method) {
  require_valid_j(j);
  if (method == DisplacementMethod::factored) return factored_displacement(j, p);
  const Su2Triple g = generators(j);
  OperatorMatrix generator = p.xi * g.plus;
  generator -= std::conj(p.xi) * g.minus;
  return matrix_exp(generator);
}

StateVector pncs(HalfInt j, HalfInt mu, const CoherentParams& p) {
  SumPrecision ignored;
  return pncs(j, mu, p, ignored);
}

StateVector pncs(HalfInt j, HalfInt mu, const CoherentParams& p, SumPrecision& used) {
  require_valid_pair(j, mu);
  used = SumPrecision{};
  if (p.theta == 0.0) return basis_state(j, mu);

  const PncsLayout l{j.twice(), (j.twice() + mu.twice()) / 2, (j.twice() - mu.twice()) / 2, mu.value()};
  const double lz = std::log(std::tan(0.5 * p.theta));

  std::vector<double> signed_sum(static_cast<std::size_t>(l.j2) + 1, 0.0);
  std::vector<double> log_abs_sum(static_cast<std::size_t>(l.j2) + 1, kNegInf);
  for_each_term(l, [&](int n, int s, int label) {
    const double log_t = (n + s) * lz - log_factorial(n) - log_factorial(s) + p.eta * (l.mu - n) +
                         log_factorial(l.b + n) - log_factorial(l.a - n) +
                         0.5 * (log_factorial(l.a) + log_factorial(label) - log_factorial(l.b) -
                                log_factorial(l.j2 - label));
    log_abs_sum[label] = log_add(log_abs_sum[label], log_t);
    const double t = std::exp(log_t);
    signed_sum[label] += (n % 2 == 0) ? t : -t;
  });

  const double worst = *std::max_element(log_abs_sum.begin(), log_abs_sum.end());
  used.cancellation_bits = worst / std::numbers::ln2;
  if (used.cancellation_bits > kDoubleCancellationBits) {
    const mpfr_prec_t bits = working_bits(used.cancellation_bits);
    used.precision_bits = static_cast<int>(bits);
    return pncs_multiprecision(j, l, p, bits);
  }

  const double alpha = zeta_arg(p);
  StateVector out{j, std::vector<cplx>(signed_sum.size())};
  for (int i = 0; i <= l.j2; ++i) out.amplitudes[i] = std::polar(signed_sum[i], alpha * (i - l.a));
  return out;
}

StateVector scs(HalfInt j, const CoherentParams& p) {
  require_valid_j(j);
  if (p.theta == 0.0) return basis_state(j, -j);
  const int j2 = j.twice();
  const double lz = std::log(std::tan(0.5 * p.theta));
  const double alpha = zeta_arg(p);
  StateVector out{j, std::vector<cplx>(static_cast<std::size_t>(j2) + 1)};
  for (int k = 0; k <= j2; ++k) {  // k = j + mu
    const double log_mag = 0.5 * (log_factorial(j2) - log_factorial(k) - log_factorial(j2 - k)) + k * lz -
                           j.value() * p.eta;
    out.amplitudes[k] = std::polar(std::exp(log_mag), alpha * k);
  }
  return out;
}

Su2Triple transformed_generators(HalfInt j, const CoherentParams& p) {
  Su2Triple g = generators(j);
  if (p.theta == 0.0) return g;
  const cplx u = p.xi_phase();
  const cplx uc = std::conj(u);
  const double d = p.delta;
  const double e = p.eps;

  OperatorMatrix ip = (uc * d) * g.zero + e * g.plus + (e * uc / u) * g.minus + g.plus;
  OperatorMatrix im = (u * d) * g.zero + e * g.minus + (e * u / uc) * g.plus + g.minus;
  OperatorMatrix i0 = (2.0 * e + 1.0) * g.zero - (0.5 * d * u) * g.plus - (0.5 * d * uc) * g.minus;
  return {std::move(ip), std::move(im), std::move(i0)};
}

Su2Triple dagger_transformed_generators(HalfInt j, const CoherentParams& p) {
  Su2Triple g = generators(j);
  if (p.theta == 0.0) return g;
  const cplx u = p.xi_phase();
  const cplx uc = std::conj(u);
  const double d = p.delta;
  const double e = p.eps;

  OperatorMatrix jp = (-uc * d) * g.zero + e * g.plus + (e * uc / u) * g.minus + g.plus;
  OperatorMatrix jm = (-u * d) * g.zero + e * g.minus + (e * u / uc) * g.plus + g.minus;
  OperatorMatrix j0 = (2.0 * e + 1.0) * g.zero + (0.5 * d * u) * g.plus + (0.5 * d * uc) * g.minus;
  return {std::move(jp), std::move(jm), std::move(j0)};
}

}  // namespace su2cs
