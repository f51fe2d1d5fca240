#include "kernels/variants.hpp"

namespace su2cs::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, &detail::axpy_scalar, &detail::dotc_scalar,
                              &detail::rotate_scalar, &detail::gemm_scalar};

#if defined(SU2CS_BUILD_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &detail::axpy_avx2, &detail::dotc_avx2,
                            &detail::rotate_avx2, &detail::gemm_avx2};

bool cpu_has_avx2_fma() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept { return kScalar; }

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SU2CS_BUILD_AVX2)
    {
      static const bool ok = cpu_has_avx2_fma();
      return ok;
    }
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) noexcept {
#if defined(SU2CS_BUILD_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = isa_available(Isa::Avx2) ? kernels_for(Isa::Avx2) : kScalar;
  return table;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

}  // namespace su2cs::kernels
