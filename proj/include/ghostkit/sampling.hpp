#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ghostkit/complex.hpp"

namespace ghostkit {

/// Deterministic across platforms: only raw engine output is used, never the
/// implementation-defined standard distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

Scalar random_nonzero_scalar(const RingSpec& ring, SeededRng& rng);
/// Each monomial of the degree appears with probability 1/2.
Poly random_homogeneous(const RingSpec& ring, SeededRng& rng, unsigned degree);
/// Sum of random homogeneous parts of degrees 0..max_degree.
Poly random_poly(const RingSpec& ring, SeededRng& rng, unsigned max_degree);

/// Drops columns lying in the span of the remaining ones, highest degree
/// first. For homogeneous input the survivors generate minimally.
FreeMap prune_generators(const FreeMap& gens);

/// Free resolution of a homogeneous presentation, pruned at every step:
/// degree 0 is A^ambient_rank, d_1 the pruned relations.
FreeComplex minimal_free_resolution(const ModulePresentation& m);

/// Resolution of the cokernel of a random homogeneous matrix (entries of
/// degree 1 or 2), randomly shifted and sometimes padded by a contractible
/// summand.
FreeComplex random_perfect_complex(const RingSpec& ring, SeededRng& rng);

/// A^a -> A^b with random entries of degree <= 2, in degrees lo+1, lo.
FreeComplex random_two_term_complex(const RingSpec& ring, SeededRng& rng);

/// A random variable, or a product of two random variables.
AlgebraElement random_variable_or_product(const RingSpec& ring, SeededRng& rng);

}  // namespace ghostkit
