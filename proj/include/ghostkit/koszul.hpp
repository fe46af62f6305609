#pragma once

#include <optional>
#include <vector>

#include "ghostkit/complex.hpp"

namespace ghostkit {

/// M//(x1..xt): M for t = 0, otherwise cone(x_t · id) on M//(x1..x_{t-1}).
FreeComplex koszul_object(const FreeComplex& m, const std::vector<AlgebraElement>& xs);

/// ε(x): Σ^{-1}(M//x) -> M, the desuspended projection of the defining
/// triangle. Its degree-i component is the projection M_i ⊕ M_{i+1} -> M_i.
ChainMap epsilon_map(const FreeComplex& m, const AlgebraElement& x);

/// x^n ∘ ε(x^{n+1}) : Σ^{-1}(stage//x^{n+1}) -> stage.
ChainMap ghost_factor(const FreeComplex& stage, const AlgebraElement& x, unsigned n);

/// Stage s is Σ^{-s}(M//(x1^{n1+1}..xs^{ns+1})), built as Σ^{-1} of the cone
/// on stage s-1. eps_maps[s-1] and factors[s-1] go from stage s to stage s-1.
struct KoszulTower {
  FreeComplex base;
  std::vector<AlgebraElement> elements;
  std::vector<unsigned> exponents;
  std::vector<FreeComplex> stages;
  std::vector<ChainMap> eps_maps;
  std::vector<ChainMap> factors;

  std::size_t length() const { return elements.size(); }
  const FreeComplex& top() const { return stages.back(); }
};

KoszulTower build_tower(const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                        const std::vector<unsigned>& exponents);

/// factors[0] ∘ ... ∘ factors[t-1] : stage t -> M; the identity for t = 0.
ChainMap ghost_candidate_composition(const KoszulTower& tower);

/// Largest x-torsion exponent over the nonzero degrees of Hom*(G, stage).
unsigned auto_exponent(const FreeComplex& g, const FreeComplex& stage, const AlgebraElement& x);

/// Builds the tower one stage at a time, taking n_s = auto_exponent(G,
/// stage s-1, x_s) unless an override is given for position s.
KoszulTower build_tower_auto(const FreeComplex& g, const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                             const std::vector<std::optional<unsigned>>& overrides = {});

std::vector<unsigned> auto_exponents(const FreeComplex& g, const FreeComplex& m,
                                     const std::vector<AlgebraElement>& xs);

}  // namespace ghostkit
