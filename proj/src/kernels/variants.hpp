#pragma once

#include "su2cs/kernels.hpp"

namespace su2cs::kernels::detail {

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y);
void rotate_scalar(std::size_t n, cplx a, cplx b, cplx c, cplx d, cplx* x, cplx* y);
void gemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c);

#if defined(SU2CS_BUILD_AVX2)
void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y);
void rotate_avx2(std::size_t n, cplx a, cplx b, cplx c, cplx d, cplx* x, cplx* y);
void gemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c);
#endif

}  // namespace su2cs::kernels::detail
