#include "ghostkit/simd/fp_kernels.hpp"

#include <cassert>

namespace ghostkit::simd {

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
                     std::uint32_t p) {
  assert(dst.size() == src.size());
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
}

void scale_mod_scalar(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (auto& x : v) x = static_cast<std::uint32_t>((cc * x) % p);
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#ifdef GHOSTKIT_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const Kernels& kernels_for(Isa isa) {
  static const Kernels scalar{Isa::Scalar, axpy_mod_scalar, scale_mod_scalar};
#ifdef GHOSTKIT_HAVE_AVX2_KERNELS
  static const Kernels avx2{Isa::Avx2, axpy_mod_avx2, scale_mod_avx2};
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return avx2;
#endif
  return scalar;
}

const Kernels& kernels() {
  static const Kernels& chosen = kernels_for(isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar);
  return chosen;
}

}  // namespace ghostkit::simd
