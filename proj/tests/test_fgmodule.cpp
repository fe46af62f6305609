#include <gtest/gtest.h>

#include <functional>

#include "ghostkit/error.hpp"
#include "ghostkit/sampling.hpp"
#include "support/fixtures.hpp"
#include "support/truncation_oracle.hpp"

using namespace fixtures;

namespace {

// coker of a 1-row presentation is A/I; checks I = (gens).
bool is_cyclic_with_ideal(const ModulePresentation& m, const FreeMap& ideal_row) {
  return m.ambient_rank == 1 && same_submodule(m.relations, ideal_row, FreeMap(m.ring(), 1, 0));
}

ModulePresentation cyclic(const RingSpec& r, const std::string& gens) {
  return ModulePresentation::cyclic(r, parse_poly_list(gens, r));
}

std::size_t longest_regular_search(const std::vector<Poly>& cands, const ModulePresentation& m, std::size_t cap) {
  std::size_t best = 0;
  std::vector<AlgebraElement> cur;
  std::function<void()> rec = [&] {
    best = std::max(best, cur.size());
    if (cur.size() == cap || best == cap) return;
    for (const auto& c : cands) {
      cur.push_back({c, 0});
      if (is_regular_sequence(cur, m)) rec();
      cur.pop_back();
    }
  };
  rec();
  return best;
}

}  // namespace

TEST(KernelMult, DomainHasNoKernel) {
  RingSpec r = fp(2);
  EXPECT_TRUE(is_zero_module(kernel_mult(el(r, "x0"), ModulePresentation::free(r, 1))));
}

TEST(KernelMult, SquareOfVariable) {
  RingSpec r = fp(2);
  ModulePresentation k = kernel_mult(el(r, "x0"), cyclic(r, "x0^2"));
  EXPECT_TRUE(is_cyclic_with_ideal(k, row(r, {"x0"})));
}

TEST(KernelMult, ZeroElementKeepsEverything) {
  RingSpec r = fp(2);
  ModulePresentation k = kernel_mult(el(r, "0"), cyclic(r, "x0^2"));
  EXPECT_TRUE(is_cyclic_with_ideal(k, row(r, {"x0^2"})));
}

TEST(TorsionSubmodule, Examples) {
  RingSpec r = fp(2);
  EXPECT_TRUE(is_zero_module(torsion_submodule(el(r, "x0"), ModulePresentation::free(r, 2))));
  ModulePresentation m = direct_sum(cyclic(r, "x0^2"), ModulePresentation::free(r, 1));
  EXPECT_TRUE(is_cyclic_with_ideal(torsion_submodule(el(r, "x0"), m), row(r, {"x0^2"})));
  EXPECT_TRUE(is_zero_module(torsion_submodule(el(r, "5"), cyclic(r, "x0^2"))));
}

TEST(TorsionExponent, Examples) {
  RingSpec r = fp(2);
  EXPECT_EQ(torsion_exponent(el(r, "x0"), ModulePresentation::free(r, 1)), 0u);
  EXPECT_EQ(torsion_exponent(el(r, "x0"), cyclic(r, "x0")), 1u);
  EXPECT_EQ(torsion_exponent(el(r, "x0"), cyclic(r, "x0^2")), 2u);
  EXPECT_EQ(torsion_exponent(el(r, "x0"), direct_sum(cyclic(r, "x0^3, x1"), cyclic(r, "x0*x1"))), 3u);
}

TEST(TorsionExponent, KernelChainMatchesOracle) {
  // dim ker(x^k on M)_e = dim M_e - dim (x^k M)_{e+k}, with
  // dim (x^k M)_d = rank (x^k | I)_d - rank I_d for M = A/I.
  RingSpec r = fp(2);
  for (const char* ideal : {"x0^2", "x0^2*x1, x0^3", "x0*x1"}) {
    ModulePresentation m = cyclic(r, ideal);
    for (unsigned k = 1; k <= 3; ++k) {
      Poly xk = P(r, "x0").pow(k);
      FreeMap gens = kernel_power_generators(P(r, "x0"), k, m);
      Subquotient sub = subquotient_with_generators(gens, m.relations);
      oracle::Degrees gd;
      for (const auto& d : oracle::column_degrees(sub.generators, {0})) gd.push_back(d ? *d : 0);
      FreeMap with_x = hconcat(FreeMap::from_rows(r, {{xk}}), m.relations);
      for (int e = 0; e <= 6; ++e) {
        const int ek = e + static_cast<int>(k);
        std::size_t image = oracle::image_rank(with_x, {0}, ek) - oracle::image_rank(m.relations, {0}, ek);
        std::size_t expected = oracle::hilbert(m.relations, {0}, e) - image;
        std::size_t got = sub.module.ambient_rank == 0 ? 0 : oracle::hilbert(sub.module.relations, gd, e);
        EXPECT_EQ(got, expected) << ideal << " k=" << k << " e=" << e;
      }
    }
  }
}

TEST(TorsionExponent, StabilizationProperty) {
  RingSpec r = fp(2);
  SeededRng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    FreeMap rel(r, 1 + rng.below(2), 1 + rng.below(3));
    for (std::size_t a = 0; a < rel.target_rank(); ++a)
      for (std::size_t b = 0; b < rel.source_rank(); ++b) rel.at(a, b) = random_homogeneous(r, rng, 1 + rng.below(2));
    ModulePresentation m(rel.target_rank(), rel);
    AlgebraElement x = random_variable_or_product(r, rng);
    unsigned n = torsion_exponent(x, m);
    FreeMap kn = kernel_power_generators(x.value, n, m);
    EXPECT_TRUE(same_submodule(kn, kernel_power_generators(x.value, n + 1, m), m.relations));
    EXPECT_TRUE(same_submodule(kn, kernel_power_generators(x.value, n + 5, m), m.relations));
    Poly xn = x.value.pow(n);
    for (const auto& g : kn.columns()) EXPECT_TRUE(lift_membership(scale(g, xn), m.relations).has_value());
  }
}

TEST(RegularSequence, Examples) {
  RingSpec r = fp(2);
  ModulePresentation a = ModulePresentation::free(r, 1);
  EXPECT_TRUE(is_regular_sequence(seq(r, "x0,x1"), a));
  EXPECT_FALSE(is_regular_sequence(seq(r, "x0,x0"), a));
  EXPECT_TRUE(is_regular_sequence(seq(r, "x0^2,x1"), a));
  EXPECT_FALSE(is_regular_sequence(seq(r, "x0,1"), a));
  EXPECT_FALSE(is_regular_sequence(seq(r, "x0,0"), a));
}

TEST(RegularSequence, PowersStayRegular) {
  RingSpec r = fp(3);
  ModulePresentation a = ModulePresentation::free(r, 1);
  for (const char* s : {"x0", "x0,x1", "x0^2,x1", "x0,x1,x2", "x0+x1,x1*x2"}) {
    auto xs = seq(r, s);
    ASSERT_TRUE(is_regular_sequence(xs, a)) << s;
    for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
      auto ys = xs;
      for (std::size_t i = 0; i < ys.size(); ++i) ys[i].value = ys[i].value.pow(1 + ((mask >> i) & 1));
      EXPECT_TRUE(is_regular_sequence(ys, a)) << s << " mask " << mask;
    }
  }
}

TEST(KoszulHomology, SingleVariable) {
  RingSpec r = fp(2);
  auto h = koszul_homology(IdealGens{seq(r, "x0")}, ModulePresentation::free(r, 1));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(is_cyclic_with_ideal(h[0], row(r, {"x0"})));
  EXPECT_TRUE(is_zero_module(h[1]));
}

TEST(KoszulHomology, TwoVariablesAgreesWithOracle) {
  RingSpec r = fp(2);
  auto xs = parse_poly_list("x0,x1", r);
  auto h = koszul_homology(IdealGens{as_elements(xs)}, ModulePresentation::free(r, 1));
  ASSERT_EQ(h.size(), 3u);
  EXPECT_TRUE(is_zero_module(h[1]));
  EXPECT_TRUE(is_zero_module(h[2]));
  FreeComplex k(r, 0, {1, 2, 1}, {koszul_matrix(r, xs, 1), koszul_matrix(r, xs, 2)});
  auto degrees = oracle::infer_degrees(k);
  ASSERT_TRUE(degrees);
  for (int e = 0; e <= 6; ++e) {
    EXPECT_EQ(oracle::hilbert(h[0].relations, {0}, e), oracle::homology_dim(k, *degrees, 0, e + (*degrees)[0][0]));
    EXPECT_EQ(oracle::homology_dim(k, *degrees, 1, e), 0u);
    EXPECT_EQ(oracle::homology_dim(k, *degrees, 2, e), 0u);
  }
}

TEST(KoszulHomology, ZeroElement) {
  RingSpec r = fp(2);
  auto h = koszul_homology(IdealGens{seq(r, "0")}, ModulePresentation::free(r, 1));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].ambient_rank, 1u);
  EXPECT_EQ(h[1].ambient_rank, 1u);
  EXPECT_TRUE(h[0].relations.is_zero());
  EXPECT_TRUE(h[1].relations.is_zero());
}

TEST(KoszulMatrix, SquaresToZero) {
  RingSpec r = fp(3);
  auto xs = parse_poly_list("x0,x1^2,x0*x2", r);
  for (std::size_t i = 2; i <= 3; ++i) EXPECT_TRUE((koszul_matrix(r, xs, i - 1) * koszul_matrix(r, xs, i)).is_zero());
}

TEST(Depth, Examples) {
  RingSpec r = fp(2);
  ModulePresentation a = ModulePresentation::free(r, 1);
  EXPECT_EQ(depth(IdealGens{seq(r, "x0,x1")}, a), (Depth{false, 2}));
  EXPECT_EQ(depth(IdealGens{seq(r, "1")}, a), Depth::infinity());
  EXPECT_EQ(depth(IdealGens{seq(r, "1")}, cyclic(r, "x0")), Depth::infinity());
  EXPECT_EQ(depth(IdealGens{seq(r, "x0")}, cyclic(r, "x0")), (Depth{false, 0}));
  EXPECT_EQ(depth(IdealGens{seq(r, "x0")}, a).to_string(), "1");
  EXPECT_EQ(Depth::infinity().to_string(), "infinity");
}

TEST(Depth, VariablesOfPolynomialRings) {
  for (std::size_t n = 1; n <= 3; ++n) {
    RingSpec r = fp(n);
    std::vector<AlgebraElement> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back({Poly::variable(r, i), 0});
    EXPECT_EQ(depth(IdealGens{vars}, ModulePresentation::free(r, 1)), (Depth{false, n}));
  }
}

TEST(Depth, MatchesExhaustiveRegularSequenceSearch) {
  RingSpec r = fp(2);
  SeededRng rng(31);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Poly> rel;
    for (std::size_t k = 0, n = rng.below(3); k < n; ++k) rel.push_back(random_homogeneous(r, rng, 1 + rng.below(2)));
    ModulePresentation m = ModulePresentation::cyclic(r, rel);
    std::vector<Poly> gens;
    for (std::size_t k = 0, n = 1 + rng.below(2); k < n; ++k) gens.push_back(random_homogeneous(r, rng, 1));
    std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    Depth d = depth(IdealGens{as_elements(gens)}, m);
    if (d.infinite) continue;
    std::vector<Poly> cands = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i; j < gens.size(); ++j) {
        cands.push_back(gens[i] * gens[j]);
        if (i != j) cands.push_back(gens[i] + gens[j]);
      }
    EXPECT_EQ(longest_regular_search(cands, m, 3), d.value) << "trial " << trial;
    auto found = regular_sequence_in(IdealGens{as_elements(gens)}, m, d.value);
    ASSERT_TRUE(found);
    EXPECT_TRUE(d.value == 0 || is_regular_sequence(*found, m));
    ++checked;
  }
  EXPECT_GE(checked, 6);
}

TEST(RegularSequenceIn, FindsSumsWhenGeneratorsAreZeroDivisors) {
  RingSpec r = fp(2);
  ModulePresentation m = cyclic(r, "x0*x1");
  IdealGens a{seq(r, "x0,x1")};
  EXPECT_EQ(depth(a, m), (Depth{false, 1}));
  auto found = regular_sequence_in(a, m, 1);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_regular_sequence(*found, m));
  EXPECT_FALSE(regular_sequence_in(a, m, 2));
}
