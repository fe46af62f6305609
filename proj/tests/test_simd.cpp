#include <gtest/gtest.h>

#include "ghostkit/dense_fp.hpp"
#include "ghostkit/sampling.hpp"
#include "ghostkit/simd/fp_kernels.hpp"

using namespace ghostkit;

namespace {

std::vector<std::uint32_t> residues(SeededRng& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& e : v) e = static_cast<std::uint32_t>(rng.below(p));
  return v;
}

constexpr std::uint32_t kPrimes[] = {2, 3, 101, 32003, 65521, 1000003, 67108859, 2147483647u};

}  // namespace

TEST(FpKernels, ScalarReference) {
  std::vector<std::uint32_t> dst{1, 2, 3}, src{4, 5, 6};
  simd::axpy_mod_scalar(dst, src, 3, 7);
  EXPECT_EQ(dst, (std::vector<std::uint32_t>{6, 3, 0}));
  simd::scale_mod_scalar(dst, 2, 7);
  EXPECT_EQ(dst, (std::vector<std::uint32_t>{5, 6, 0}));
}

TEST(FpKernels, Avx2MatchesScalar) {
  if (!simd::isa_available(simd::Isa::Avx2)) GTEST_SKIP() << "no AVX2";
  const auto& vec = simd::kernels_for(simd::Isa::Avx2);
  SeededRng rng(99);
  for (std::uint32_t p : kPrimes)
    for (std::size_t n : {0, 1, 3, 4, 7, 8, 9, 31, 64, 257}) {
      auto src = residues(rng, n, p);
      auto a = residues(rng, n, p);
      auto b = a;
      for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng.below(p))}) {
        simd::axpy_mod_scalar(a, src, c, p);
        vec.axpy(b, src, c, p);
        ASSERT_EQ(a, b) << "axpy p=" << p << " n=" << n << " c=" << c;
        simd::scale_mod_scalar(a, c == 0 ? 1 : c, p);
        vec.scale(b, c == 0 ? 1 : c, p);
        ASSERT_EQ(a, b) << "scale p=" << p << " n=" << n << " c=" << c;
      }
    }
}

TEST(DenseFp, RowReduceAgreesAcrossIsas) {
  if (!simd::isa_available(simd::Isa::Avx2)) GTEST_SKIP() << "no AVX2";
  SeededRng rng(5);
  for (std::uint32_t p : {3u, 32003u, 1000003u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t rows = 1 + rng.below(12), cols = 1 + rng.below(40);
      DenseFpMatrix m(rows, cols, p);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (rng.chance(2, 3)) m.set(r, c, static_cast<std::int64_t>(rng.below(p)));
      if (rows > 2)
        for (std::size_t c = 0; c < cols; ++c) m.set(rows - 1, c, (m.at(0, c) + 2 * std::int64_t{m.at(1, c)}) % p);
      DenseFpMatrix a = m, b = m;
      auto pa = a.row_reduce(simd::kernels_for(simd::Isa::Scalar));
      auto pb = b.row_reduce(simd::kernels_for(simd::Isa::Avx2));
      EXPECT_EQ(pa, pb);
      EXPECT_EQ(a, b);
      EXPECT_EQ(m.rank(simd::kernels_for(simd::Isa::Scalar)), m.rank(simd::kernels_for(simd::Isa::Avx2)));
      if (rows > 2) EXPECT_LT(pa.size(), rows);
    }
  }
}

TEST(DenseFp, KnownRank) {
  DenseFpMatrix m(3, 3, 5);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.set(r, c, r * 3 + c + 1);
  for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2})
    if (simd::isa_available(isa)) EXPECT_EQ(m.rank(simd::kernels_for(isa)), 2u) << simd::to_string(isa);
  DenseFpMatrix n(2, 2, 7);
  n.set(0, 0, -1);
  EXPECT_EQ(n.at(0, 0), 6u);
}
