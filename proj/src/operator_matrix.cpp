#include "su2cs/operator_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "su2cs/errors.hpp"
#include "su2cs/kernels.hpp"

namespace su2cs {
namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw ContractError("operator dimensions differ");
}

}  // namespace

OperatorMatrix::OperatorMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw ContractError("OperatorMatrix: dim must be >= 1");
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw ContractError("OperatorMatrix: dim must be >= 1");
  if (data_.size() != dim * dim) throw ContractError("OperatorMatrix: entry count != dim^2");
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  OperatorMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const double> values) {
  OperatorMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const cplx> values) {
  OperatorMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<cplx> OperatorMatrix::column(std::size_t c) const {
  std::vector<cplx> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_dim(*this, other);
  kernels::active().axpy(data_.size(), 1.0, other.data_.data(), data_.data());
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_dim(*this, other);
  kernels::active().axpy(data_.size(), -1.0, other.data_.data(), data_.data());
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cplx scale) noexcept {
  for (auto& v : data_) v *= scale;
  return *this;
}

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
OperatorMatrix operator*(cplx scale, OperatorMatrix m) { return m *= scale; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  OperatorMatrix c(a.dim());
  kernels::active().gemm(a.dim(), a.data().data(), b.data().data(), c.data().data());
  return c;
}

std::vector<cplx> apply(const OperatorMatrix& m, std::span<const cplx> v) {
  if (v.size() != m.dim()) throw ContractError("apply: vector length != operator dim");
  std::vector<cplx> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    cplx acc{0.0, 0.0};
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.dim(); ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

OperatorMatrix adjoint(const OperatorMatrix& m) {
  OperatorMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

namespace {

// Dot2 accumulation: each product and each addition is split into its
// rounded value and exact error term (fma / TwoSum), errors summed apart.
struct CompensatedSum {
  double sum = 0.0;
  double err = 0.0;

  void add_product(double x, double y) noexcept {
    const double p = x * y;
    const double pe = std::fma(x, y, -p);
    const double s = sum + p;
    const double z = s - sum;
    err += pe + ((sum - (s - z)) + (p - z));
    sum = s;
  }
  double value() const noexcept { return sum + err; }
};

void add_complex_product(CompensatedSum& re, CompensatedSum& im, cplx x, cplx y, double sign) noexcept {
  re.add_product(sign * x.real(), y.real());
  re.add_product(-sign * x.imag(), y.imag());
  im.add_product(sign * x.real(), y.imag());
  im.add_product(sign * x.imag(), y.real());
}

}  // namespace

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  OperatorMatrix out(n);
  const cplx zero{0.0, 0.0};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      CompensatedSum re, im;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(r, k) != zero && b(k, c) != zero) add_complex_product(re, im, a(r, k), b(k, c), 1.0);
        if (b(r, k) != zero && a(k, c) != zero) add_complex_product(re, im, b(r, k), a(k, c), -1.0);
      }
      out(r, c) = {re.value(), im.value()};
    }
  }
  return out;
}

double max_abs(const OperatorMatrix& m) noexcept {
  double best = 0.0;
  for (const auto& v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  double best = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) best = std::max(best, std::abs(da[i] - db[i]));
  return best;
}

double frobenius_norm(const OperatorMatrix& m) noexcept {
  double acc = 0.0;
  for (const auto& v : m.data()) acc += std::norm(v);
  return std::sqrt(acc);
}

double one_norm(const OperatorMatrix& m) noexcept {
  double best = 0.0;
  for (std::size_t c = 0; c < m.dim(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) col += std::abs(m(r, c));
    best = std::max(best, col);
  }
  return best;
}

double hermiticity_defect(const OperatorMatrix& m) noexcept {
  double best = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      best = std::max(best, std::abs(m(r, c) - std::conj(m(c, r))));
  return best;
}

bool all_finite(const OperatorMatrix& m) noexcept {
  return std::all_of(m.data().begin(), m.data().end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

double max_off_diagonal(const OperatorMatrix& m) noexcept {
  double best = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (r != c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw ContractError("inner: length mismatch");
  return kernels::active().dotc(x.size(), x.data(), y.data());
}

double norm2(std::span<const cplx> x) { return std::sqrt(std::abs(inner(x, x))); }

}  // namespace su2cs
