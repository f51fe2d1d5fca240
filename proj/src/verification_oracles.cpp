#include "verification_oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>

#include "su2cs/errors.hpp"

namespace su2cs::oracle {
namespace {

namespace mp = boost::multiprecision;

template <unsigned Bits>
using Float = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;

template <class F>
struct Cx {
  F re, im;
};

template <class F>
Cx<F> mul(const Cx<F>& a, const Cx<F>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class F>
F factorial(int n) {
  F f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

template <class F>
Cx<F> cpow(const Cx<F>& z, int n) {
  Cx<F> r{F(1), F(0)};
  for (int k = 0; k < n; ++k) r = mul(r, z);
  return r;
}

// Parameters rebuilt from theta, phi at the oracle's own precision.
template <class F>
struct Zeta {
  Cx<F> zeta;       // -tan(theta/2) e^{-i phi}
  Cx<F> neg_conj;   // -zeta*
  F weight;         // e^eta = 1 + |zeta|^2
};

template <class F>
Zeta<F> make_zeta(double theta, double phi) {
  const F t = mp::tan(F(theta) / 2);
  const F c = mp::cos(F(phi));
  const F s = mp::sin(F(phi));
  Zeta<F> z;
  z.zeta = {-t * c, t * s};
  z.neg_conj = {t * c, t * s};
  z.weight = 1 + t * t;
  return z;
}

template <class F>
std::vector<F> factorial_table(int upto) {
  std::vector<F> f(static_cast<std::size_t>(upto) + 1);
  f[0] = 1;
  for (int k = 1; k <= upto; ++k) f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k) - 1] * k;
  return f;
}

// Coefficient of |mu - n + s> in exp(zeta J+) exp(eta J0) exp(-zeta* J-)|j, mu>,
// labels in doubled units. Returns false when a factorial argument is
// negative (the reciprocal factorial vanishes).
template <class F>
bool term(const Zeta<F>& z, const std::vector<F>& fact, int tj, int tmu, int n, int s, Cx<F>& out) {
  const auto f = [&fact](int k) -> const F& { return fact[static_cast<std::size_t>(k)]; };
  const int jpm = (tj + tmu) / 2;  // j + mu
  const int jmm = (tj - tmu) / 2;  // j - mu
  const int after_lower = jpm - n;      // j + mu - n
  const int room_above = jmm + n - s;   // j - (mu - n + s)
  if (after_lower < 0 || room_above < 0) return false;
  // exp(-zeta* J-) step: |mu> -> |mu - n>
  const F lower = mp::sqrt(f(jpm) * f(jmm + n) / (f(after_lower) * f(jmm)));
  // exp(zeta J+) step: |mu - n> -> |mu - n + s>
  const F upper = mp::sqrt(f(after_lower + s) * f(jmm + n) / (f(after_lower) * f(room_above)));
  // e^{eta (mu - n)} in doubled units: weight^{(2mu - 2n)/2}
  const int twice_weight_power = tmu - 2 * n;
  F w = mp::pow(z.weight, twice_weight_power / 2);
  if (twice_weight_power % 2 != 0) w *= (twice_weight_power > 0 ? mp::sqrt(z.weight) : 1 / mp::sqrt(z.weight));
  const F real_part = lower * upper * w / (f(n) * f(s));
  const Cx<F> phase = mul(cpow(z.neg_conj, n), cpow(z.zeta, s));
  out = {phase.re * real_part, phase.im * real_part};
  return true;
}

// Bits needed to absorb the cancellation of the double sum: every term is
// bounded by (1 + tan^2)^{3j}.
int required_bits(HalfInt j, double theta) {
  const double t = std::tan(0.5 * theta);
  return 96 + static_cast<int>(std::ceil(1.5 * j.twice() * std::log2(1.0 + t * t)));
}

template <class F>
std::vector<std::complex<double>> swapped_sum(HalfInt j, HalfInt mu, double theta, double phi) {
  const Zeta<F> z = make_zeta<F>(theta, phi);
  const int tj = j.twice();
  const int tmu = mu.twice();
  const std::vector<F> fact = factorial_table<F>(2 * tj + 1);
  std::vector<Cx<F>> acc(static_cast<std::size_t>(tj + 1), Cx<F>{F(0), F(0)});
  for (int s = 0; s <= tj; ++s) {
    for (int n = 0; n <= tj; ++n) {
      Cx<F> t;
      if (!term(z, fact, tj, tmu, n, s, t)) continue;
      const int index = (tj + tmu) / 2 - n + s;  // (mu - n + s) + j
      acc[static_cast<std::size_t>(index)].re += t.re;
      acc[static_cast<std::size_t>(index)].im += t.im;
    }
  }
  std::vector<std::complex<double>> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.emplace_back(static_cast<double>(a.re), static_cast<double>(a.im));
  return out;
}

template <class F>
F laguerre(int n, int m, const F& x) {
  F sum = 0;
  F xp = 1;
  for (int i = 0; i <= n; ++i) {
    const F c = factorial<F>(n + m) / (factorial<F>(n - i) * factorial<F>(m + i) * factorial<F>(i));
    sum += (i % 2 == 0 ? c : -c) * xp;
    xp *= x;
  }
  return sum;
}

// Unit-normalized <rho, angle | N, m>.
template <class F>
Cx<F> polar_state(int N, int m, const F& rho, const F& angle) {
  const int am = std::abs(m);
  const int n_rho = (N - am) / 2;
  const F pi = mp::acos(F(-1));
  F amp = mp::sqrt(2 * factorial<F>(n_rho) / factorial<F>(n_rho + am)) / mp::sqrt(2 * pi);
  amp *= mp::pow(rho, am) * laguerre<F>(n_rho, am, rho * rho) * mp::exp(-rho * rho / 2);
  if (n_rho % 2 != 0) amp = -amp;
  return {amp * mp::cos(m * angle), amp * mp::sin(m * angle)};
}

template <class F>
std::complex<double> direct_wavefunction(HalfInt j, HalfInt mu, double theta, double phi, double rho,
                                         double angle) {
  const Zeta<F> z = make_zeta<F>(theta, phi);
  const int tj = j.twice();
  const int tmu = mu.twice();
  const std::vector<F> fact = factorial_table<F>(2 * tj + 1);
  const F r(rho);
  const F a(angle);
  Cx<F> acc{F(0), F(0)};
  for (int n = 0; n <= (tj + tmu) / 2; ++n) {
    for (int s = 0; s <= (tj - tmu) / 2 + n; ++s) {
      Cx<F> t;
      if (!term(z, fact, tj, tmu, n, s, t)) continue;
      const Cx<F> psi = polar_state<F>(tj, tmu - 2 * n + 2 * s, r, a);
      const Cx<F> c = mul(t, psi);
      acc.re += c.re;
      acc.im += c.im;
    }
  }
  return {static_cast<double>(acc.re), static_cast<double>(acc.im)};
}

void require_pair(HalfInt j, HalfInt mu, double theta) {
  require_valid_pair(j, mu);
  if (!(theta >= 0.0 && theta < std::acos(-1.0))) throw DomainError("oracle: theta outside [0, pi)");
}

}  // namespace

double log_factorial_exact(int n) {
  if (n < 0 || n > 20) throw DomainError("log_factorial_exact: n must be in 0..20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return std::log(static_cast<double>(f));
}

double laguerre_series(int n, int m, double x) {
  if (n < 0 || m < 0) throw DomainError("laguerre_series: n, m must be >= 0");
  return static_cast<double>(laguerre<Float<200>>(n, m, Float<200>(x)));
}

std::vector<std::complex<double>> pncs_swapped_unclamped(HalfInt j, HalfInt mu, double theta, double phi) {
  require_pair(j, mu, theta);
  const int bits = required_bits(j, theta);
  if (bits <= 256) return swapped_sum<Float<256>>(j, mu, theta, phi);
  if (bits <= 1024) return swapped_sum<Float<1024>>(j, mu, theta, phi);
  if (bits <= 4096) return swapped_sum<Float<4096>>(j, mu, theta, phi);
  throw DomainError("pncs_swapped_unclamped: theta too close to pi for the oracle precision");
}

std::complex<double> pncs_wavefunction_direct(HalfInt j, HalfInt mu, double theta, double phi, double rho,
                                              double angle) {
  require_pair(j, mu, theta);
  const int bits = required_bits(j, theta);
  if (bits <= 256) return direct_wavefunction<Float<256>>(j, mu, theta, phi, rho, angle);
  if (bits <= 1024) return direct_wavefunction<Float<1024>>(j, mu, theta, phi, rho, angle);
  if (bits <= 4096) return direct_wavefunction<Float<4096>>(j, mu, theta, phi, rho, angle);
  throw DomainError("pncs_wavefunction_direct: theta too close to pi for the oracle precision");
}

}  // namespace su2cs::oracle
