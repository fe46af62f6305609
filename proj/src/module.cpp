#include "ghostkit/module.hpp"

#include <algorithm>
#include <random>

#include "ghostkit/error.hpp"

namespace ghostkit {

ModulePresentation::ModulePresentation(std::size_t rank, FreeMap rels) : ambient_rank(rank), relations(std::move(rels)) {
  if (relations.target_rank() != ambient_rank)
    invalid_input("relations target rank " + std::to_string(relations.target_rank()) +
                  " does not match ambient rank " + std::to_string(ambient_rank));
}

ModulePresentation ModulePresentation::free(const RingSpec& ring, std::size_t rank) {
  return {rank, FreeMap(ring, rank, 0)};
}

ModulePresentation ModulePresentation::zero(const RingSpec& ring) { return {0, FreeMap(ring, 0, 0)}; }

ModulePresentation ModulePresentation::cyclic(const RingSpec& ring, const std::vector<Poly>& gens) {
  return {1, FreeMap::from_rows(ring, {gens})};
}

bool is_zero_module(const ModulePresentation& m) {
  if (m.ambient_rank == 0) return true;
  return module_groebner(m.relations).is_everything();
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  return {a.ambient_rank + b.ambient_rank, direct_sum(a.relations, b.relations)};
}

ModulePresentation quotient(const ModulePresentation& m, const std::vector<Poly>& xs) {
  FreeMap rels = m.relations;
  for (const auto& x : xs) rels = hconcat(rels, FreeMap::scalar(m.ring(), m.ambient_rank, x));
  return {m.ambient_rank, rels};
}

namespace {

FreeMap drop_zero_columns(const FreeMap& f) {
  std::vector<Vec> cols;
  for (auto& c : f.columns())
    if (!is_zero(c)) cols.push_back(std::move(c));
  return FreeMap::from_columns(f.ring(), f.target_rank(), cols);
}

FreeMap top_rows(const FreeMap& f, std::size_t n) { return f.submatrix(0, n, 0, f.source_rank()); }

}  // namespace

Subquotient subquotient_with_generators(const FreeMap& gens, const FreeMap& rels) {
  const RingSpec& ring = gens.ring();
  ModuleGB rel_gb = module_groebner(rels);
  std::vector<Vec> kept;
  for (auto& c : gens.columns())
    if (!rel_gb.contains(c)) kept.push_back(std::move(c));
  if (kept.empty()) return {ModulePresentation::zero(ring), FreeMap(ring, gens.target_rank(), 0)};
  FreeMap k = FreeMap::from_columns(ring, gens.target_rank(), kept);
  FreeMap syz = syzygies(hconcat(k, rels));
  return {ModulePresentation(kept.size(), drop_zero_columns(top_rows(syz, kept.size()))), k};
}

ModulePresentation subquotient(const FreeMap& gens, const FreeMap& rels) {
  return subquotient_with_generators(gens, rels).module;
}

void GradedModule::set(int degree, ModulePresentation m) {
  if (is_zero_module(m)) components_.erase(degree);
  else components_[degree] = std::move(m);
}

ModulePresentation GradedModule::at(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? ModulePresentation::zero(ring_) : it->second;
}

GradedModule GradedModule::reindexed(int shift) const {
  GradedModule out(ring_);
  for (const auto& [d, m] : components_) out.components_[d + shift] = m;
  return out;
}

ModulePresentation GradedModule::total() const {
  ModulePresentation acc = ModulePresentation::zero(ring_);
  for (const auto& [d, m] : components_) acc = direct_sum(acc, m);
  return acc;
}

std::vector<Poly> IdealGens::polys() const {
  std::vector<Poly> out;
  for (const auto& g : gens) out.push_back(g.value);
  return out;
}

FreeMap kernel_power_generators(const Poly& x, unsigned n, const ModulePresentation& m) {
  const std::size_t r = m.ambient_rank;
  FreeMap combined = hconcat(FreeMap::scalar(m.ring(), r, x.pow(n)), m.relations);
  return top_rows(syzygies(combined), r);
}

bool same_submodule(const FreeMap& a, const FreeMap& b, const FreeMap& rels) {
  ModuleGB ga = module_groebner(hconcat(a, rels));
  for (const auto& c : b.columns())
    if (!ga.contains(c)) return false;
  ModuleGB gb = module_groebner(hconcat(b, rels));
  for (const auto& c : a.columns())
    if (!gb.contains(c)) return false;
  return true;
}

ModulePresentation kernel_mult(const AlgebraElement& x, const ModulePresentation& m) {
  return subquotient(kernel_power_generators(x.value, 1, m), m.relations);
}

namespace {

// Generators of ker(x^n) at the first n where the kernel chain stops growing.
std::pair<unsigned, FreeMap> stable_kernel(const Poly& x, const ModulePresentation& m) {
  FreeMap current = kernel_power_generators(x, 0, m);
  for (unsigned n = 0; n < kTorsionChainCap; ++n) {
    FreeMap next = kernel_power_generators(x, n + 1, m);
    ModuleGB gb = module_groebner(current);
    bool grew = false;
    for (const auto& c : next.columns())
      if (!gb.contains(c)) {
        grew = true;
        break;
      }
    if (!grew) return {n, current};
    current = std::move(next);
  }
  internal_error("torsion kernel chain did not stabilize within " + std::to_string(kTorsionChainCap) + " steps");
}

}  // namespace

ModulePresentation torsion_submodule(const AlgebraElement& x, const ModulePresentation& m) {
  if (m.ambient_rank == 0) return m;
  return subquotient(stable_kernel(x.value, m).second, m.relations);
}

unsigned torsion_exponent(const AlgebraElement& x, const ModulePresentation& m) {
  if (m.ambient_rank == 0) return 0;
  return stable_kernel(x.value, m).first;
}

unsigned torsion_exponent(const AlgebraElement& x, const GradedModule& m) {
  unsigned n = 0;
  for (const auto& [d, comp] : m.components()) n = std::max(n, torsion_exponent(x, comp));
  return n;
}

bool is_nonzerodivisor(const Poly& x, const ModulePresentation& m) {
  if (m.ambient_rank == 0) return true;
  ModuleGB gb = module_groebner(m.relations);
  for (const auto& c : kernel_power_generators(x, 1, m).columns())
    if (!gb.contains(c)) return false;
  return true;
}

bool is_regular_sequence(const std::vector<AlgebraElement>& xs, const ModulePresentation& m) {
  ModulePresentation cur = m;
  for (const auto& x : xs) {
    if (!is_nonzerodivisor(x.value, cur)) return false;
    cur = quotient(cur, {x.value});
  }
  return !is_zero_module(cur);
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t t, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = start; j < t; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

FreeMap kron_identity(const FreeMap& d, std::size_t r) {
  FreeMap out(d.ring(), d.target_rank() * r, d.source_rank() * r);
  for (std::size_t a = 0; a < d.target_rank(); ++a)
    for (std::size_t b = 0; b < d.source_rank(); ++b)
      if (!d.at(a, b).is_zero())
        for (std::size_t k = 0; k < r; ++k) out.at(a * r + k, b * r + k) = d.at(a, b);
  return out;
}

FreeMap repeated(const FreeMap& rels, std::size_t copies) {
  FreeMap out(rels.ring(), 0, 0);
  for (std::size_t c = 0; c < copies; ++c) out = direct_sum(out, rels);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ModulePresentation koszul_homology_at(const std::vector<Poly>& xs, const ModulePresentation& m, std::size_t i) {
  const RingSpec& ring = m.ring();
  const std::size_t t = xs.size(), r = m.ambient_rank;
  const std::size_t rank_i = binomial(t, i) * r;
  FreeMap cycles = FreeMap::identity(ring, rank_i);
  if (i > 0) {
    FreeMap d = kron_identity(koszul_matrix(ring, xs, i), r);
    cycles = top_rows(syzygies(hconcat(d, repeated(m.relations, binomial(t, i - 1)))), rank_i);
  }
  FreeMap bounds = repeated(m.relations, binomial(t, i));
  if (i < t) bounds = hconcat(kron_identity(koszul_matrix(ring, xs, i + 1), r), bounds);
  return subquotient(cycles, bounds);
}

}  // namespace

FreeMap koszul_matrix(const RingSpec& ring, const std::vector<Poly>& xs, std::size_t i) {
  const std::size_t t = xs.size();
  if (i == 0 || i > t) invalid_input("Koszul differential index out of range");
  auto src = subsets(t, i);
  auto tgt = subsets(t, i - 1);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < tgt.size(); ++k) index[tgt[k]] = k;
  FreeMap d(ring, tgt.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& s = src[col];
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      d.at(index.at(face), col) = (k % 2 == 0) ? xs[s[k]] : -xs[s[k]];
    }
  }
  return d;
}

std::vector<ModulePresentation> koszul_homology(const IdealGens& xs, const ModulePresentation& m) {
  std::vector<Poly> polys = xs.polys();
  std::vector<ModulePresentation> out;
  for (std::size_t i = 0; i <= polys.size(); ++i) out.push_back(koszul_homology_at(polys, m, i));
  return out;
}

Depth depth(const IdealGens& a, const ModulePresentation& m) {
  std::vector<Poly> polys = a.polys();
  if (is_zero_module(quotient(m, polys))) return Depth::infinity();
  for (std::size_t i = polys.size() + 1; i-- > 0;) {
    if (!is_zero_module(koszul_homology_at(polys, m, i))) return {false, polys.size() - i};
  }
  internal_error("depth: H_0 vanished although aM != M");
}

std::optional<std::vector<AlgebraElement>> regular_sequence_in(const IdealGens& a, const ModulePresentation& m,
                                                               std::size_t length, std::uint64_t seed) {
  std::vector<Poly> gens;
  for (const auto& g : a.gens)
    if (!g.value.is_zero()) gens.push_back(g.value);
  std::vector<Poly> candidates;
  auto offer = [&](const Poly& p) {
    if (p.is_zero()) return;
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
  };
  for (const auto& g : gens) offer(g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) offer(gens[i] + gens[j]);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) offer(gens[i] * gens[j]);
  if (!gens.empty()) {
    std::mt19937_64 rng(seed);
    const Field f(m.ring());
    for (int k = 0; k < 8; ++k) {
      Poly combo(m.ring());
      for (const auto& g : gens) {
        std::int64_t c = f.characteristic() ? static_cast<std::int64_t>(rng() % f.characteristic())
                                            : static_cast<std::int64_t>(rng() % 19) - 9;
        combo += g.scaled(f.from_int(c));
      }
      offer(combo);
    }
  }

  // Every maximal regular sequence in the ideal has the same length, so a
  // greedy choice never has to backtrack.
  std::vector<AlgebraElement> chosen;
  ModulePresentation cur = m;
  while (chosen.size() < length) {
    bool extended = false;
    for (const auto& c : candidates) {
      if (!is_nonzerodivisor(c, cur)) continue;
      ModulePresentation next = quotient(cur, {c});
      if (is_zero_module(next)) continue;
      chosen.emplace_back(c);
      cur = std::move(next);
      extended = true;
      break;
    }
    if (!extended) return std::nullopt;
  }
  return chosen;
}

}  // namespace ghostkit
