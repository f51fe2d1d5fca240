#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace su2cs {

using cplx = std::complex<double>;

/// Dense complex square matrix, row-major. Represents an operator on a
/// finite basis (Dicke irrep, Fock block, ...). Dimension is at least one.
class OperatorMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit OperatorMatrix(std::size_t dim);
  OperatorMatrix(std::size_t dim, std::vector<cplx> entries);

  static OperatorMatrix identity(std::size_t dim);
  static OperatorMatrix diagonal(std::span<const double> values);
  static OperatorMatrix diagonal(std::span<const cplx> values);

  std::size_t dim() const noexcept { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

  std::span<cplx> row(std::size_t r) noexcept { return {data_.data() + r * dim_, dim_}; }
  std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * dim_, dim_}; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  /// Column c as a fresh vector.
  std::vector<cplx> column(std::size_t c) const;

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(cplx scale) noexcept;

 private:
  std::size_t dim_;
  std::vector<cplx> data_;
};

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(cplx scale, OperatorMatrix m);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

/// Matrix-vector product.
std::vector<cplx> apply(const OperatorMatrix& m, std::span<const cplx> v);

OperatorMatrix adjoint(const OperatorMatrix& m);
/// [a, b] = ab - ba, each entry accumulated with error-free products and
/// sums: the error is one rounding of the exact entry plus a term of order
/// n eps^2 times the magnitudes of the cancelling products.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

double max_abs(const OperatorMatrix& m) noexcept;
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);
double frobenius_norm(const OperatorMatrix& m) noexcept;
/// Maximum absolute column sum.
double one_norm(const OperatorMatrix& m) noexcept;
/// max |A - A^dagger|
double hermiticity_defect(const OperatorMatrix& m) noexcept;
bool all_finite(const OperatorMatrix& m) noexcept;
/// max over off-diagonal entries of |A_rc|
double max_off_diagonal(const OperatorMatrix& m) noexcept;

/// <x|y> = sum conj(x_i) y_i
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm2(std::span<const cplx> x);

}  // namespace su2cs
