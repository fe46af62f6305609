#include "ghostkit/simd/fp_kernels.hpp"

#ifdef GHOSTKIT_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace ghostkit::simd {

namespace {

constexpr std::uint32_t kMaxDoublePrime = 1u << 26;

// x holds exact integers in [0, 2^53); returns x mod p for 4 lanes.
__attribute__((target("avx2,fma"))) inline __m128i reduce4(__m256d x, __m256d p, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_fnmadd_pd(q, p, x);
  // pinv rounding can leave r one step outside [0, p)
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return _mm256_cvttpd_epi32(r);
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod_avx2(std::span<std::uint32_t> dst,
                                                       std::span<const std::uint32_t> src, std::uint32_t c,
                                                       std::uint32_t p) {
  if (p >= kMaxDoublePrime) return axpy_mod_scalar(dst, src, c, p);
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256d dlo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(d));
    __m256d dhi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(d, 1));
    __m256d slo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(s));
    __m256d shi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(s, 1));
    __m128i rlo = reduce4(_mm256_fmadd_pd(vc, slo, dlo), vp, vpinv);
    __m128i rhi = reduce4(_mm256_fmadd_pd(vc, shi, dhi), vp, vpinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_set_m128i(rhi, rlo));
  }
  if (i < n) axpy_mod_scalar(dst.subspan(i), src.subspan(i), c, p);
}

__attribute__((target("avx2,fma"))) void scale_mod_avx2(std::span<std::uint32_t> v, std::uint32_t c,
                                                        std::uint32_t p) {
  if (p >= kMaxDoublePrime) return scale_mod_scalar(v, c, p);
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  const std::size_t n = v.size();
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
    __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
    __m128i rlo = reduce4(_mm256_mul_pd(vc, lo), vp, vpinv);
    __m128i rhi = reduce4(_mm256_mul_pd(vc, hi), vp, vpinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i), _mm256_set_m128i(rhi, rlo));
  }
  if (i < n) scale_mod_scalar(v.subspan(i), c, p);
}

}  // namespace ghostkit::simd

#endif
