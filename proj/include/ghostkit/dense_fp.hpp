#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghostkit/simd/fp_kernels.hpp"

namespace ghostkit {

/// Dense row-major matrix over F_p, residues in [0, p).
class DenseFpMatrix {
 public:
  DenseFpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> row_reduce(const simd::Kernels& kernels = simd::kernels());
  std::size_t rank(const simd::Kernels& kernels = simd::kernels()) const;

  bool operator==(const DenseFpMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace ghostkit
