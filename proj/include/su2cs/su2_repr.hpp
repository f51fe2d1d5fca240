#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "su2cs/operator_matrix.hpp"

namespace su2cs {

/// Exact half-integer stored as twice its value. Used for the irrep label j
/// and the weight mu; conversion to floating point happens only inside
/// matrix-element formulas.
class HalfInt {
 public:
  constexpr HalfInt() noexcept = default;

  static constexpr HalfInt from_twice(int twice) noexcept { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) noexcept { return HalfInt(2 * value); }
  /// Accepts 0.5-multiples such as 1, -1.5, 2.0; throws DomainError otherwise.
  static HalfInt from_double(double value);

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const noexcept { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(int twice) noexcept : twice_(twice) {}
  int twice_ = 0;
};

/// |2mu| <= 2j, 2mu = 2j (mod 2), j >= 0.
bool is_valid_pair(HalfInt j, HalfInt mu) noexcept;
/// Throws DomainError when (j, mu) is not a valid Dicke label.
void require_valid_pair(HalfInt j, HalfInt mu);
/// Throws DomainError for negative j.
void require_valid_j(HalfInt j);

/// The (2j+1)-dimensional irrep with basis index i <-> mu = -j + i.
class Irrep {
 public:
  explicit Irrep(HalfInt j);

  HalfInt j() const noexcept { return j_; }
  int dim() const noexcept { return j_.twice() + 1; }
  /// Basis index of weight mu; throws DomainError if mu is not in the irrep.
  int index_of(HalfInt mu) const;
  HalfInt mu_at(int index) const;

 private:
  HalfInt j_;
};

/// (plus, minus, zero) operators of one su(2) realization.
struct Su2Triple {
  OperatorMatrix plus;
  OperatorMatrix minus;
  OperatorMatrix zero;
};

/// (j - mu)(j + mu + 1) and (j + mu)(j - mu + 1) as exact integers; zero
/// where the ladder step leaves the irrep.
std::int64_t raising_element_squared(HalfInt j, HalfInt mu) noexcept;
std::int64_t lowering_element_squared(HalfInt j, HalfInt mu) noexcept;

/// sqrt((j - mu)(j + mu + 1)) from the exact integer product
/// (2j - 2mu)(2j + 2mu + 2) / 4.
double raising_element(HalfInt j, HalfInt mu) noexcept;
/// sqrt((j + mu)(j - mu + 1))
double lowering_element(HalfInt j, HalfInt mu) noexcept;

/// J+, J-, J0 on the Dicke basis, mu ascending.
Su2Triple generators(HalfInt j);

/// J0^2 + (J+J- + J-J+)/2 with every product taken from the exact squared
/// matrix elements; equals j(j+1) I exactly.
OperatorMatrix casimir(HalfInt j);
/// The same combination from numerical matrices (any realization).
OperatorMatrix casimir(const Su2Triple& t);

}  // namespace su2cs
