// Compiled with -mavx2 -mfma; only reached after a runtime cpuid check.

#include <immintrin.h>

#include <algorithm>

#include "kernels/variants.hpp"

namespace su2cs::kernels::detail {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// alpha * v for a broadcast complex scalar held as (re, im) splats.
inline __m256d cmul(__m256d re, __m256d im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(re, v, _mm256_mul_pd(im, swapped));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, load2(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  // conj(x) y = (xr yr + xi yi) + i (xr yi - xi yr)
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d vy = load2(y + i);
    same = _mm256_fmadd_pd(vx, vy, same);
    cross = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), cross);
  }
  alignas(32) double c[4];
  _mm256_store_pd(c, cross);
  cplx acc{hsum(same), (c[0] - c[1]) + (c[2] - c[3])};
  for (; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void rotate_avx2(std::size_t n, cplx a, cplx b, cplx c, cplx d, cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d vy = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul(ar, ai, vx), cmul(br, bi, vy)));
    store2(y + i, _mm256_add_pd(cmul(cr, ci, vx), cmul(dr, di, vy)));
  }
  for (; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

void gemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  std::fill(c, c + n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == cplx{0.0, 0.0}) continue;
      axpy_avx2(n, aik, b + k * n, crow);
    }
  }
}

}  // namespace su2cs::kernels::detail
