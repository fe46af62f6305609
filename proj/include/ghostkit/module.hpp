#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ghostkit/groebner.hpp"

namespace ghostkit {

/// Finitely presented module coker(relations: A^m -> A^ambient_rank).
struct ModulePresentation {
  std::size_t ambient_rank = 0;
  FreeMap relations;

  ModulePresentation() = default;
  ModulePresentation(std::size_t rank, FreeMap rels);

  const RingSpec& ring() const { return relations.ring(); }

  static ModulePresentation free(const RingSpec& ring, std::size_t rank);
  static ModulePresentation zero(const RingSpec& ring);
  /// A / (gens)
  static ModulePresentation cyclic(const RingSpec& ring, const std::vector<Poly>& gens);
};

bool is_zero_module(const ModulePresentation& m);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);
/// M / (xs) M
ModulePresentation quotient(const ModulePresentation& m, const std::vector<Poly>& xs);
/// (im gens + im rels) / im rels, presented on the columns of `gens`. Columns
/// of `gens` already in im rels are dropped.
ModulePresentation subquotient(const FreeMap& gens, const FreeMap& rels);

struct Subquotient {
  ModulePresentation module;
  /// The columns of `gens` kept as generators, in presentation order.
  FreeMap generators;
};

Subquotient subquotient_with_generators(const FreeMap& gens, const FreeMap& rels);

/// Degree-indexed family of modules; only nonzero components are stored.
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(const RingSpec& ring) : ring_(ring) {}

  const RingSpec& ring() const { return ring_; }
  void set(int degree, ModulePresentation m);
  const std::map<int, ModulePresentation>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// Zero module when the degree is not stored.
  ModulePresentation at(int degree) const;
  GradedModule reindexed(int shift) const;
  /// Direct sum over all degrees, as a single ungraded module.
  ModulePresentation total() const;

 private:
  RingSpec ring_;
  std::map<int, ModulePresentation> components_;
};

struct IdealGens {
  std::vector<AlgebraElement> gens;

  std::vector<Poly> polys() const;
};

/// Submodule {v in A^r : x^n v in im R} for M = coker R, as generating columns.
FreeMap kernel_power_generators(const Poly& x, unsigned n, const ModulePresentation& m);
/// True iff the column spans of a and b agree modulo im(rels).
bool same_submodule(const FreeMap& a, const FreeMap& b, const FreeMap& rels);

ModulePresentation kernel_mult(const AlgebraElement& x, const ModulePresentation& m);
/// Union of ker(x^n) over n (the x-torsion), taken at the stabilizing term.
ModulePresentation torsion_submodule(const AlgebraElement& x, const ModulePresentation& m);

inline constexpr unsigned kTorsionChainCap = 64;

/// Smallest n with ker(x^n) = ker(x^{n+1}) on M; InternalError past the cap.
unsigned torsion_exponent(const AlgebraElement& x, const ModulePresentation& m);
/// Maximum over the nonzero components.
unsigned torsion_exponent(const AlgebraElement& x, const GradedModule& m);

bool is_nonzerodivisor(const Poly& x, const ModulePresentation& m);
bool is_regular_sequence(const std::vector<AlgebraElement>& xs, const ModulePresentation& m);

/// Matrix of the classical Koszul differential Λ^i A^t -> Λ^{i-1} A^t on the
/// lexicographically ordered subset bases, e_S -> Σ_k (-1)^k x_{s_k} e_{S \ s_k}.
FreeMap koszul_matrix(const RingSpec& ring, const std::vector<Poly>& xs, std::size_t i);

/// H_0..H_t of K(xs) ⊗ M.
std::vector<ModulePresentation> koszul_homology(const IdealGens& xs, const ModulePresentation& m);

struct Depth {
  bool infinite = false;
  std::size_t value = 0;

  static Depth infinity() { return {true, 0}; }
  bool operator==(const Depth&) const = default;
  std::string to_string() const { return infinite ? "infinity" : std::to_string(value); }
};

/// Infinity when aM = M, else |a| minus the top nonvanishing Koszul homology index.
Depth depth(const IdealGens& a, const ModulePresentation& m);

/// Searches for an M-regular sequence of the given length inside the ideal:
/// generators, pairwise sums and products, then seeded linear combinations.
std::optional<std::vector<AlgebraElement>> regular_sequence_in(const IdealGens& a, const ModulePresentation& m,
                                                               std::size_t length, std::uint64_t seed = 1);

}  // namespace ghostkit
