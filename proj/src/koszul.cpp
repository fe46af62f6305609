#include "ghostkit/koszul.hpp"

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace {

void require_degree_zero(const AlgebraElement& x) {
  if (x.degree != 0) invalid_input("only elements of internal degree 0 are supported, got |x| = " +
                                   std::to_string(x.degree));
}

FreeComplex next_stage(const FreeComplex& stage, const Poly& y) {
  return shift(cone(ChainMap::scalar(stage, y)).cone, -1);
}

}  // namespace

FreeComplex koszul_object(const FreeComplex& m, const std::vector<AlgebraElement>& xs) {
  FreeComplex cur = m;
  for (const auto& x : xs) {
    require_degree_zero(x);
    cur = cone(ChainMap::scalar(cur, x.value)).cone;
  }
  return cur;
}

ChainMap epsilon_map(const FreeComplex& m, const AlgebraElement& x) {
  require_degree_zero(x);
  return shift(cone(ChainMap::scalar(m, x.value)).projection, -1);
}

ChainMap ghost_factor(const FreeComplex& stage, const AlgebraElement& x, unsigned n) {
  require_degree_zero(x);
  ChainMap eps = epsilon_map(stage, AlgebraElement(x.value.pow(n + 1)));
  if (n == 0) return eps;
  return ChainMap::scalar(stage, x.value.pow(n)) * eps;
}

KoszulTower build_tower(const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                        const std::vector<unsigned>& exponents) {
  if (xs.size() != exponents.size()) invalid_input("one exponent per sequence element is required");
  std::vector<std::optional<unsigned>> fixed(exponents.begin(), exponents.end());
  return build_tower_auto(FreeComplex(m.ring()), m, xs, fixed);
}

ChainMap ghost_candidate_composition(const KoszulTower& tower) {
  ChainMap acc = ChainMap::identity(tower.base);
  for (const auto& f : tower.factors) acc = acc * f;
  return acc;
}

unsigned auto_exponent(const FreeComplex& g, const FreeComplex& stage, const AlgebraElement& x) {
  return torsion_exponent(x, graded_hom(g, stage));
}

KoszulTower build_tower_auto(const FreeComplex& g, const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                             const std::vector<std::optional<unsigned>>& overrides) {
  if (!overrides.empty() && overrides.size() != xs.size())
    invalid_input("exponent overrides must match the sequence length");
  KoszulTower tower;
  tower.base = m;
  tower.elements = xs;
  tower.stages.push_back(m);
  for (std::size_t s = 0; s < xs.size(); ++s) {
    const AlgebraElement& x = xs[s];
    require_degree_zero(x);
    const FreeComplex& prev = tower.stages.back();
    unsigned n = (!overrides.empty() && overrides[s]) ? *overrides[s] : auto_exponent(g, prev, x);
    Poly y = x.value.pow(n + 1);
    ChainMap eps = epsilon_map(prev, AlgebraElement(y));
    ChainMap factor = n == 0 ? eps : ChainMap::scalar(prev, x.value.pow(n)) * eps;
    tower.exponents.push_back(n);
    tower.stages.push_back(next_stage(prev, y));
    tower.eps_maps.push_back(std::move(eps));
    tower.factors.push_back(std::move(factor));
  }
  return tower;
}

std::vector<unsigned> auto_exponents(const FreeComplex& g, const FreeComplex& m,
                                     const std::vector<AlgebraElement>& xs) {
  return build_tower_auto(g, m, xs).exponents;
}

}  // namespace ghostkit
