#pragma once
// Complex double inner-loop kernels with a scalar reference path and
// ISA-specific variants chosen once at runtime.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace su2cs::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Function table for one instruction-set variant. All pointers operate on
/// interleaved std::complex<double> storage; no alignment is assumed.
struct KernelTable {
  Isa isa;
  /// y[i] += alpha * x[i]
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  /// returns sum_i conj(x[i]) * y[i]
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
  /// x' = a x + b y,  y' = c x + d y   (elementwise, in place)
  void (*rotate)(std::size_t n, cplx a, cplx b, cplx c, cplx d, cplx* x, cplx* y);
  /// c = a * b for row-major square n x n matrices; c must not alias a or b.
  void (*gemm)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
};

const KernelTable& scalar_kernels() noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Table for a specific variant; falls back to scalar when unavailable.
const KernelTable& kernels_for(Isa isa) noexcept;

/// The widest available variant, detected on first call.
const KernelTable& active() noexcept;

/// Every variant usable on this machine, scalar first.
std::vector<Isa> available_isas();

}  // namespace su2cs::kernels
