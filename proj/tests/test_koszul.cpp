#include <gtest/gtest.h>

#include "ghostkit/error.hpp"
#include "ghostkit/sampling.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

TEST(KoszulObject, EmptySequenceIsTheModule) {
  RingSpec r = fp(2);
  FreeComplex m = koszul_object(A(r), seq(r, "x1"));
  EXPECT_EQ(koszul_object(m, {}), m);
}

TEST(KoszulObject, OneElementIsTheCone) {
  RingSpec r = fp(2);
  FreeComplex k = koszul_object(A(r), seq(r, "x0"));
  EXPECT_EQ(k, cone(ChainMap::scalar(A(r), P(r, "x0"))).cone);
  EXPECT_EQ(homology_support(k), std::vector<int>{0});
  EXPECT_TRUE(same_submodule(homology(k, 0).relations, row(r, {"x0"}), FreeMap(r, 1, 0)));
}

TEST(KoszulObject, TwoVariablesMatchClassicalKoszulComplex) {
  RingSpec r = fp(2);
  FreeComplex k = koszul_object(A(r), seq(r, "x0,x1"));
  EXPECT_EQ(ranks(k), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(homology_support(k), std::vector<int>{0});
  auto classical = koszul_homology(IdealGens{seq(r, "x0,x1")}, ModulePresentation::free(r, 1));
  EXPECT_TRUE(same_submodule(homology(k, 0).relations, classical[0].relations, FreeMap(r, 1, 0)));
}

TEST(KoszulObject, ThreeVariablesHaveBinomialRanks) {
  RingSpec r = fp(3);
  FreeComplex k = koszul_object(A(r), seq(r, "x0,x1,x2"));
  EXPECT_EQ(ranks(k), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(homology_support(k), std::vector<int>{0});
}

TEST(KoszulObject, RejectsNonzeroInternalDegree) {
  RingSpec r = fp(1);
  EXPECT_THROW(koszul_object(A(r), {AlgebraElement{P(r, "x0"), 2}}), Error);
}

TEST(EpsilonMap, DegreeZeroComponentIsIdentity) {
  RingSpec r = fp(2);
  ChainMap eps = epsilon_map(A(r), el(r, "x0"));
  EXPECT_EQ(eps.component(0), FreeMap::identity(r, 1));
  EXPECT_EQ(eps.source(), shift(koszul_object(A(r), seq(r, "x0")), -1));
  EXPECT_TRUE(is_nullhomotopic(ChainMap::scalar(A(r), P(r, "x0")) * eps));
  EXPECT_FALSE(is_nullhomotopic(eps));
}

TEST(EpsilonMap, ZeroElementProjects) {
  RingSpec r = fp(2);
  ChainMap eps = epsilon_map(A(r), el(r, "0"));
  EXPECT_EQ(eps.source(), direct_sum(A(r), shift(A(r), -1)));
  EXPECT_EQ(eps.component(0), FreeMap::identity(r, 1));
  EXPECT_TRUE(eps.component(-1).is_zero());
}

TEST(GhostFactor, ZeroExponentIsEpsilon) {
  RingSpec r = fp(2);
  FreeComplex m = koszul_object(A(r), seq(r, "x1"));
  EXPECT_EQ(ghost_factor(m, el(r, "x0"), 0), epsilon_map(m, el(r, "x0")));
}

TEST(GhostFactor, ExponentOneIsMultipleOfEpsilonOfSquare) {
  RingSpec r = fp(2);
  ChainMap f = ghost_factor(A(r), el(r, "x0"), 1);
  EXPECT_EQ(f, ChainMap::scalar(A(r), P(r, "x0")) * epsilon_map(A(r), el(r, "x0^2")));
  EXPECT_EQ(f.component(0), FreeMap::scalar(r, 1, P(r, "x0")));
}

TEST(GhostFactor, CommutesWithMultiplication) {
  RingSpec r = fp(3);
  SeededRng rng(12);
  for (int i = 0; i < 10; ++i) {
    FreeComplex m = random_perfect_complex(r, rng);
    AlgebraElement x = random_variable_or_product(r, rng);
    Poly y = random_variable_or_product(r, rng).value.pow(static_cast<unsigned>(rng.below(3)));
    ChainMap f = ghost_factor(m, x, static_cast<unsigned>(rng.below(3)));
    EXPECT_EQ(f * ChainMap::scalar(f.source(), y), ChainMap::scalar(f.target(), y) * f);
  }
}

TEST(Tower, StagesAreDesuspendedCones) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), seq(r, "x0,x1"), {1, 0});
  ASSERT_EQ(t.stages.size(), 3u);
  EXPECT_EQ(t.stages[0], A(r));
  EXPECT_EQ(t.stages[1], shift(cone(ChainMap::scalar(A(r), P(r, "x0^2"))).cone, -1));
  EXPECT_EQ(t.stages[2], shift(cone(ChainMap::scalar(t.stages[1], P(r, "x1"))).cone, -1));
  for (std::size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(t.factors[s].source(), t.stages[s + 1]);
    EXPECT_EQ(t.factors[s].target(), t.stages[s]);
  }
  EXPECT_THROW(build_tower(A(r), seq(r, "x0,x1"), {1}), Error);
}

TEST(Tower, TriangleIdentityPerStage) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), seq(r, "x0,x1,x0*x1"), {1, 0, 2});
  for (std::size_t s = 0; s < t.length(); ++s) {
    Poly y = t.elements[s].value.pow(t.exponents[s] + 1);
    EXPECT_TRUE(is_nullhomotopic(ChainMap::scalar(t.stages[s], y) * t.eps_maps[s])) << s;
  }
}

TEST(Composition, EmptyTowerGivesIdentity) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), {}, {});
  EXPECT_EQ(ghost_candidate_composition(t), ChainMap::identity(A(r)));
}

TEST(Composition, EqualsScaledEpsilonChain) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), seq(r, "x0,x1"), {1, 2});
  ChainMap eps_chain = t.eps_maps[0] * t.eps_maps[1];
  EXPECT_EQ(ghost_candidate_composition(t), ChainMap::scalar(A(r), P(r, "x0*x1^2")) * eps_chain);
}

TEST(Composition, RegularSequenceIsNotNullHomotopic) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), seq(r, "x0,x1"), {0, 0});
  EXPECT_FALSE(is_nullhomotopic(ghost_candidate_composition(t)));
}

TEST(Composition, RepeatedVariableWithZeroExponents) {
  // Degree 0 of the composite is id_A and the only homotopy equation there is
  // 1 = h·(x0, x0)ᵀ, so the composite is not null-homotopic; the second ε is
  // the factor that fails to be ghost.
  RingSpec r = fp(2);
  KoszulTower t = build_tower(A(r), seq(r, "x0,x0"), {0, 0});
  EXPECT_FALSE(is_nullhomotopic(ghost_candidate_composition(t)));
  EXPECT_TRUE(is_ghost(A(r), t.factors[0]));
  EXPECT_FALSE(is_ghost(A(r), t.factors[1]));
  KoszulTower tuned = build_tower(A(r), seq(r, "x0,x0"), {0, 1});
  EXPECT_TRUE(is_nullhomotopic(ghost_candidate_composition(tuned)));
}

TEST(AutoExponents, Examples) {
  RingSpec r = fp(2);
  EXPECT_EQ(auto_exponents(A(r), A(r), seq(r, "x0,x1")), (std::vector<unsigned>{0, 0}));
  FreeComplex stage = shift(cone(ChainMap::scalar(A(r), P(r, "x0^2"))).cone, -1);
  EXPECT_EQ(auto_exponent(A(r), stage, el(r, "x0")), 2u);
  EXPECT_EQ(auto_exponent(A(r), direct_sum(A(r), shift(A(r), 3)), el(r, "x1")), 0u);
  EXPECT_EQ(auto_exponents(A(r), A(r), seq(r, "x0,x0")), (std::vector<unsigned>{0, 1}));
}

TEST(AutoExponents, OverridesReplaceSelectedPositions) {
  RingSpec r = fp(2);
  KoszulTower t = build_tower_auto(A(r), A(r), seq(r, "x0,x0"), {std::nullopt, 3u});
  EXPECT_EQ(t.exponents, (std::vector<unsigned>{0, 3}));
  EXPECT_THROW(build_tower_auto(A(r), A(r), seq(r, "x0,x0"), {1u}), Error);
}

TEST(AutoExponents, LargerExponentsStayGhostOnAFixedStage) {
  RingSpec r = fp(2);
  for (const char* s : {"x0,x1", "x0,x0", "x0*x1,x0"}) {
    KoszulTower t = build_tower_auto(A(r), A(r), seq(r, s));
    for (std::size_t k = 0; k < t.length(); ++k)
      for (unsigned bump = 0; bump < 3; ++bump)
        EXPECT_TRUE(is_ghost(A(r), ghost_factor(t.stages[k], t.elements[k], t.exponents[k] + bump)))
            << s << " position " << k << " bump " << bump;
  }
}
