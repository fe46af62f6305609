#pragma once

#include <optional>
#include <vector>

#include "ghostkit/free_map.hpp"

namespace ghostkit {

namespace detail {

/// Term of a module element: coefficient * monomial * e_pos.
struct ModuleTerm {
  std::uint32_t pos;
  Monomial mono;
  Scalar coeff;
};

/// Module element as a single term list, sorted descending in the
/// position-over-term order (lower position is larger, ties by the ring order).
using SparseVec = std::vector<ModuleTerm>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, const RingSpec& ring, std::size_t rank);

}  // namespace detail

/// Reduced Gröbner basis of a submodule of A^rank, position-over-term order.
/// Rank 1 is the ideal case.
class ModuleGB {
 public:
  ModuleGB(const RingSpec& ring, std::size_t rank) : ring_(ring), rank_(rank) {}

  const RingSpec& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }

  std::vector<Vec> generators() const;
  /// Ideal case convenience: the first coordinate of each generator.
  std::vector<Poly> polys() const;

  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(normal_form(v)); }
  /// True iff every unit vector lies in the submodule.
  bool is_everything() const;

  /// Builds the basis with Buchberger's algorithm (normal selection strategy).
  static ModuleGB compute(const RingSpec& ring, std::size_t rank, const std::vector<Vec>& gens);

  const std::vector<detail::SparseVec>& sparse_basis() const { return basis_; }

 private:
  RingSpec ring_;
  std::size_t rank_;
  std::vector<detail::SparseVec> basis_;
};

ModuleGB groebner_basis(const std::vector<Poly>& gens);
Vec normal_form(const Vec& v, const ModuleGB& gb);
Poly normal_form(const Poly& p, const ModuleGB& gb);
/// Basis of the column span of the map inside its target module.
ModuleGB module_groebner(const FreeMap& image_of);
/// Columns generate the kernel of f; f * result == 0.
FreeMap syzygies(const FreeMap& f);

/// Solves f * w = v, reusing one Gröbner computation across right-hand sides.
class Lifter {
 public:
  explicit Lifter(const FreeMap& f);

  /// std::nullopt means v is not in the image (a result, not an error).
  std::optional<Vec> lift(const Vec& v) const;
  bool contains(const Vec& v) const { return lift(v).has_value(); }
  const FreeMap& map() const { return f_; }

 private:
  FreeMap f_;
  ModuleGB gb_;
};

std::optional<Vec> lift_membership(const Vec& v, const FreeMap& f);

}  // namespace ghostkit
