#include "su2cs/su2_repr.hpp"

#include <cmath>
#include <cstdint>

#include "su2cs/errors.hpp"

namespace su2cs {

HalfInt HalfInt::from_double(double value) {
  const double doubled = 2.0 * value;
  if (!std::isfinite(doubled) || std::abs(doubled) > 1e6 || doubled != std::round(doubled))
    throw DomainError("not a multiple of 1/2: " + std::to_string(value));
  return HalfInt(static_cast<int>(std::lround(doubled)));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

bool is_valid_pair(HalfInt j, HalfInt mu) noexcept {
  const int tj = j.twice();
  const int tm = mu.twice();
  return tj >= 0 && tm >= -tj && tm <= tj && (tj - tm) % 2 == 0;
}

void require_valid_j(HalfInt j) {
  if (j.twice() < 0) throw DomainError("j must be >= 0, got " + j.to_string());
}

void require_valid_pair(HalfInt j, HalfInt mu) {
  require_valid_j(j);
  if (!is_valid_pair(j, mu)) throw DomainError("invalid Dicke label (j=" + j.to_string() + ", mu=" + mu.to_string() + ")");
}

Irrep::Irrep(HalfInt j) : j_(j) { require_valid_j(j); }

int Irrep::index_of(HalfInt mu) const {
  require_valid_pair(j_, mu);
  return (mu.twice() + j_.twice()) / 2;
}

HalfInt Irrep::mu_at(int index) const {
  if (index < 0 || index >= dim()) throw DomainError("Irrep: basis index out of range");
  return HalfInt::from_twice(2 * index - j_.twice());
}

std::int64_t raising_element_squared(HalfInt j, HalfInt mu) noexcept {
  const std::int64_t a = j.twice() - mu.twice();
  const std::int64_t b = j.twice() + mu.twice() + 2;
  if (a <= 0 || b <= 0) return 0;
  return a * b / 4;
}

std::int64_t lowering_element_squared(HalfInt j, HalfInt mu) noexcept {
  const std::int64_t a = j.twice() + mu.twice();
  const std::int64_t b = j.twice() - mu.twice() + 2;
  if (a <= 0 || b <= 0) return 0;
  return a * b / 4;
}

double raising_element(HalfInt j, HalfInt mu) noexcept {
  const std::int64_t a = j.twice() - mu.twice();
  const std::int64_t b = j.twice() + mu.twice() + 2;
  if (a <= 0 || b <= 0) return 0.0;
  return 0.5 * std::sqrt(static_cast<double>(a * b));
}

double lowering_element(HalfInt j, HalfInt mu) noexcept {
  const std::int64_t a = j.twice() + mu.twice();
  const std::int64_t b = j.twice() - mu.twice() + 2;
  if (a <= 0 || b <= 0) return 0.0;
  return 0.5 * std::sqrt(static_cast<double>(a * b));
}

Su2Triple generators(HalfInt j) {
  const Irrep irrep(j);
  const auto n = static_cast<std::size_t>(irrep.dim());
  Su2Triple t{OperatorMatrix(n), OperatorMatrix(n), OperatorMatrix(n)};
  for (int i = 0; i < irrep.dim(); ++i) {
    const HalfInt mu = irrep.mu_at(i);
    const auto u = static_cast<std::size_t>(i);
    t.zero(u, u) = mu.value();
    if (i + 1 < irrep.dim()) {
      const double e = raising_element(j, mu);
      t.plus(u + 1, u) = e;
      t.minus(u, u + 1) = e;
    }
  }
  return t;
}

OperatorMatrix casimir(const Su2Triple& t) {
  OperatorMatrix c = t.zero * t.zero;
  OperatorMatrix ladder = t.plus * t.minus + t.minus * t.plus;
  ladder *= 0.5;
  c += ladder;
  return c;
}

// J+J- and J-J+ are diagonal with squared matrix elements on the diagonal,
// so the sum is assembled from the integer products rather than from the
// rounded square roots.
OperatorMatrix casimir(HalfInt j) {
  const Irrep irrep(j);
  std::vector<double> diag(static_cast<std::size_t>(irrep.dim()));
  for (int i = 0; i < irrep.dim(); ++i) {
    const HalfInt mu = irrep.mu_at(i);
    const std::int64_t four_mu_sq = static_cast<std::int64_t>(mu.twice()) * mu.twice();
    const std::int64_t ladder = lowering_element_squared(j, mu) + raising_element_squared(j, mu);
    diag[static_cast<std::size_t>(i)] = static_cast<double>(four_mu_sq + 2 * ladder) / 4.0;
  }
  return OperatorMatrix::diagonal(std::span<const double>(diag));
}

}  // namespace su2cs
