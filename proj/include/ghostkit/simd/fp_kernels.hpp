#pragma once

#include <cstdint>
#include <span>

// Row kernels for dense elimination over F_p. Entries are residues in [0, p)
// stored as uint32. Every kernel has a scalar reference; vector variants must
// agree with it bit for bit.

namespace ghostkit::simd {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

/// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
                        std::uint32_t p);
/// v[i] = (c * v[i]) mod p
using ScaleFn = void (*)(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

struct Kernels {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
                     std::uint32_t p);
void scale_mod_scalar(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
#define GHOSTKIT_HAVE_AVX2_KERNELS 1
// Exact through double arithmetic while c * src + dst < 2^53, i.e. p < 2^26;
// larger primes fall through to the scalar kernel.
void axpy_mod_avx2(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
                   std::uint32_t p);
void scale_mod_avx2(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
#endif

bool isa_available(Isa isa);
const Kernels& kernels_for(Isa isa);
/// Best kernels supported by the running CPU, chosen once.
const Kernels& kernels();

}  // namespace ghostkit::simd
