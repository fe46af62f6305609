#include "ghostkit/dense_fp.hpp"

#include <utility>

#include "ghostkit/error.hpp"

namespace ghostkit {

DenseFpMatrix::DenseFpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2) invalid_input("dense F_p matrix needs a prime modulus");
}

void DenseFpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t v = value % static_cast<std::int64_t>(p_);
  if (v < 0) v += p_;
  data_[r * cols_ + c] = static_cast<std::uint32_t>(v);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) invalid_input("zero has no inverse");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::vector<std::size_t> DenseFpMatrix::row_reduce(const simd::Kernels& kernels) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
    std::size_t piv = next;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != next)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[piv * cols_ + k], data_[next * cols_ + k]);
    kernels.scale(row(next), inverse_mod(at(next, c), p_), p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == next || at(r, c) == 0) continue;
      kernels.axpy(row(r), row(next), p_ - at(r, c), p_);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::size_t DenseFpMatrix::rank(const simd::Kernels& kernels) const {
  DenseFpMatrix copy = *this;
  return copy.row_reduce(kernels).size();
}

}  // namespace ghostkit
