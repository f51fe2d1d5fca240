#include "kernels/variants.hpp"

#include <algorithm>

namespace su2cs::kernels::detail {

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void rotate_scalar(std::size_t n, cplx a, cplx b, cplx c, cplx d, cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

void gemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  std::fill(c, c + n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == cplx{0.0, 0.0}) continue;
      axpy_scalar(n, aik, b + k * n, crow);
    }
  }
}

}  // namespace su2cs::kernels::detail
