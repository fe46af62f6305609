#pragma once

#include <cstddef>
#include <vector>

#include "ghostkit/poly.hpp"

namespace ghostkit {

/// Element of a free module A^r, one polynomial per coordinate.
using Vec = std::vector<Poly>;

Vec zero_vec(const RingSpec& ring, std::size_t rank);
Vec unit_vec(const RingSpec& ring, std::size_t rank, std::size_t index);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Poly& c);
Vec concat(const Vec& a, const Vec& b);

/// Matrix of a map A^source_rank -> A^target_rank (target_rank rows).
class FreeMap {
 public:
  FreeMap() = default;
  FreeMap(const RingSpec& ring, std::size_t target_rank, std::size_t source_rank);

  static FreeMap identity(const RingSpec& ring, std::size_t rank);
  static FreeMap scalar(const RingSpec& ring, std::size_t rank, const Poly& c);
  static FreeMap from_rows(const RingSpec& ring, const std::vector<std::vector<Poly>>& rows);
  static FreeMap from_columns(const RingSpec& ring, std::size_t target_rank, const std::vector<Vec>& cols);

  const RingSpec& ring() const { return ring_; }
  std::size_t target_rank() const { return rows_; }
  std::size_t source_rank() const { return cols_; }

  const Poly& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
  Poly& at(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }

  Vec column(std::size_t col) const;
  std::vector<Vec> columns() const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_homogeneous() const;
  /// Maximum entry degree, -1 for the zero map.
  int max_degree() const;

  /// Composition: (*this) after `other`.
  FreeMap operator*(const FreeMap& other) const;
  FreeMap operator+(const FreeMap& other) const;
  FreeMap operator-(const FreeMap& other) const;
  FreeMap operator-() const;
  FreeMap scaled(const Poly& c) const;

  FreeMap submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
  /// Copies `block` with its top-left corner at (row0, col0).
  void place(const FreeMap& block, std::size_t row0, std::size_t col0);

  bool operator==(const FreeMap& other) const = default;

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// [a | b], same target rank.
FreeMap hconcat(const FreeMap& a, const FreeMap& b);
/// [a ; b], same source rank.
FreeMap vconcat(const FreeMap& a, const FreeMap& b);
FreeMap direct_sum(const FreeMap& a, const FreeMap& b);

}  // namespace ghostkit
