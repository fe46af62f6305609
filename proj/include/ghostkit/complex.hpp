#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ghostkit/module.hpp"

namespace ghostkit {

/// Bounded complex of finite free modules, homological indexing: d_i maps
/// degree i to degree i-1. Ends with rank 0 are trimmed on construction, so
/// equality is literal equality of ranks and differentials.
class FreeComplex {
 public:
  FreeComplex() = default;
  explicit FreeComplex(const RingSpec& ring) : ring_(ring) {}
  /// `diffs[k]` is d_{lo+1+k}; throws InvalidInput on shape mismatch or d∘d != 0.
  FreeComplex(const RingSpec& ring, int lo, std::vector<std::size_t> ranks, std::vector<FreeMap> diffs);

  /// A^rank concentrated in one degree.
  static FreeComplex concentrated(const RingSpec& ring, int degree, std::size_t rank = 1);
  /// The ring itself in degree 0.
  static FreeComplex unit(const RingSpec& ring) { return concentrated(ring, 0, 1); }

  const RingSpec& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool is_zero() const { return hi_ < lo_; }
  std::size_t rank(int i) const;
  std::size_t total_rank() const;
  /// d_i : X_i -> X_{i-1}; a correctly shaped zero map outside the support.
  FreeMap d(int i) const;

  bool operator==(const FreeComplex& other) const;

 private:
  RingSpec ring_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::size_t> ranks_;
  std::vector<FreeMap> diffs_;
};

/// Degree-0 chain map. Missing components are zero.
class ChainMap {
 public:
  ChainMap() = default;
  /// Throws InvalidInput when a component has the wrong shape or a square
  /// with the differentials fails to commute.
  ChainMap(FreeComplex source, FreeComplex target, std::map<int, FreeMap> components);

  static ChainMap identity(const FreeComplex& x);
  static ChainMap zero(const FreeComplex& x, const FreeComplex& y);
  static ChainMap scalar(const FreeComplex& x, const Poly& c);

  const FreeComplex& source() const { return source_; }
  const FreeComplex& target() const { return target_; }
  FreeMap component(int i) const;
  bool is_zero() const;

  /// (*this) after `other`.
  ChainMap operator*(const ChainMap& other) const;
  ChainMap operator+(const ChainMap& other) const;
  ChainMap operator-(const ChainMap& other) const;
  ChainMap scaled(const Poly& c) const;

  bool operator==(const ChainMap& other) const;

 private:
  FreeComplex source_;
  FreeComplex target_;
  std::map<int, FreeMap> components_;
};

/// (Σ^n X)_i = X_{i-n} with differential (-1)^n d.
FreeComplex shift(const FreeComplex& x, int n);
/// (Σ^n f)_i = f_{i-n}.
ChainMap shift(const ChainMap& f, int n);

FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y);

struct ConeTriangle {
  FreeComplex cone;
  ChainMap inclusion;   // target -> cone
  ChainMap projection;  // cone -> Σ source
};

/// cone(f)_i = source_{i-1} ⊕ target_i, d = [[-d_src, 0], [-f, d_tgt]].
ConeTriangle cone(const ChainMap& f);

/// Positions of the blocks Hom(X_i, Y_{i+n}) inside Hom(X, Y)_n; each block is
/// a row-major rank(Y_{i+n}) x rank(X_i) matrix.
class HomLayout {
 public:
  HomLayout(const FreeComplex& x, const FreeComplex& y);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t rank(int n) const;
  std::size_t offset(int n, int i) const;

  Vec flatten(const ChainMap& f) const;
  /// Degree-n family {i -> Hom(X_i, Y_{i+n})} to a coordinate vector.
  Vec flatten(const std::map<int, FreeMap>& family, int n) const;
  std::map<int, FreeMap> unflatten(const Vec& v, int n) const;

 private:
  FreeComplex x_;
  FreeComplex y_;
  int lo_;
  int hi_;
};

/// Hom(X,Y)_n = ⊕_i Hom(X_i, Y_{i+n}), ∂f = d_Y f - (-1)^n f d_X, supported in
/// [lo_Y - hi_X, hi_Y - lo_X].
FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y);

/// Matrix of Hom(G, f) : Hom(G, X)_n -> Hom(G, Y)_n, φ -> f∘φ.
FreeMap hom_postcompose(const FreeComplex& g, const ChainMap& f, int n);

ModulePresentation homology(const FreeComplex& x, int i);
/// As above, with the cycles (columns in X_i) that generate the presentation.
Subquotient homology_with_generators(const FreeComplex& x, int i);

/// Component k is H_k(Hom(G, M)), the morphisms G -> Σ^{-k} M up to homotopy.
GradedModule graded_hom(const FreeComplex& g, const FreeComplex& m);

/// h_i : X_i -> Y_{i+1} with f = d_Y h + h d_X, if one exists.
std::optional<std::map<int, FreeMap>> find_nullhomotopy(const ChainMap& f);
bool is_nullhomotopic(const ChainMap& f);

/// An isomorphism X -> Y whose components are diagonal with entries ±1, when
/// the differentials agree up to such signs. Koszul complexes built with
/// different suspension conventions are related this way.
std::optional<ChainMap> sign_isomorphism(const FreeComplex& x, const FreeComplex& y);

}  // namespace ghostkit
