#include "ghostkit/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace {

void monomials_rec(std::size_t var, std::size_t num_vars, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == num_vars) {
    cur.set(var, static_cast<Monomial::Exponent>(left));
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur.set(var, static_cast<Monomial::Exponent>(e));
    monomials_rec(var + 1, num_vars, left - e, cur, out);
  }
  cur.set(var, 0);
}

int column_degree(const FreeMap& m, std::size_t col) {
  int deg = -1;
  for (std::size_t r = 0; r < m.target_rank(); ++r)
    if (!m.at(r, col).is_zero()) deg = std::max(deg, m.at(r, col).degree());
  return deg;
}

FreeMap select_columns(const FreeMap& m, const std::vector<std::size_t>& cols) {
  FreeMap out(m.ring(), m.target_rank(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < m.target_rank(); ++r) out.at(r, j) = m.at(r, cols[j]);
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  monomials_rec(0, num_vars, degree, cur, out);
  return out;
}

Scalar random_nonzero_scalar(const RingSpec& ring, SeededRng& rng) {
  Field f(ring);
  if (ring.is_prime_field()) return f.from_int(static_cast<std::int64_t>(1 + rng.below(ring.characteristic - 1)));
  auto v = static_cast<std::int64_t>(1 + rng.below(3));
  return f.from_int(rng.chance(1, 2) ? v : -v);
}

Poly random_homogeneous(const RingSpec& ring, SeededRng& rng, unsigned degree) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring.num_vars, degree))
    if (rng.chance(1, 2)) terms.push_back({random_nonzero_scalar(ring, rng), m});
  return Poly::from_terms(ring, std::move(terms));
}

Poly random_poly(const RingSpec& ring, SeededRng& rng, unsigned max_degree) {
  Poly acc(ring);
  for (unsigned d = 0; d <= max_degree; ++d) acc += random_homogeneous(ring, rng, d);
  return acc;
}

FreeMap prune_generators(const FreeMap& gens) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < gens.source_rank(); ++j)
    if (!is_zero(gens.column(j))) keep.push_back(j);
  std::vector<std::size_t> order = keep;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return column_degree(gens, a) > column_degree(gens, b);
  });
  for (std::size_t j : order) {
    std::vector<std::size_t> others;
    for (std::size_t k : keep)
      if (k != j) others.push_back(k);
    if (others.empty()) continue;
    if (lift_membership(gens.column(j), select_columns(gens, others)))
      keep = std::move(others);
  }
  return select_columns(gens, keep);
}

FreeComplex minimal_free_resolution(const ModulePresentation& m) {
  const RingSpec& ring = m.ring();
  std::vector<std::size_t> ranks{m.ambient_rank};
  std::vector<FreeMap> diffs;
  FreeMap cur = prune_generators(m.relations);
  const std::size_t cap = ring.num_vars + 2;
  while (cur.source_rank() > 0) {
    if (diffs.size() > cap) internal_error("resolution did not terminate; is the presentation homogeneous?");
    ranks.push_back(cur.source_rank());
    diffs.push_back(cur);
    cur = prune_generators(syzygies(cur));
  }
  return FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

FreeComplex random_perfect_complex(const RingSpec& ring, SeededRng& rng) {
  const std::size_t rows = 1 + rng.below(2);
  const std::size_t cols = 1 + rng.below(3);
  FreeMap rel(ring, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto deg = static_cast<unsigned>(1 + rng.below(2));
    for (std::size_t r = 0; r < rows; ++r) rel.at(r, j) = random_homogeneous(ring, rng, deg);
  }
  FreeComplex x = minimal_free_resolution(ModulePresentation(rows, rel));
  x = shift(x, static_cast<int>(rng.below(3)) - 1);
  if (rng.chance(1, 3)) {
    FreeComplex a = FreeComplex::unit(ring);
    FreeComplex contractible = cone(ChainMap::identity(a)).cone;
    x = direct_sum(x, shift(contractible, static_cast<int>(rng.below(3)) - 1));
  }
  return x;
}

FreeComplex random_two_term_complex(const RingSpec& ring, SeededRng& rng) {
  const std::size_t b = 1 + rng.below(2);
  const std::size_t a = 1 + rng.below(2);
  FreeMap d(ring, b, a);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < a; ++c) d.at(r, c) = random_poly(ring, rng, 2);
  const int lo = static_cast<int>(rng.below(3)) - 1;
  return FreeComplex(ring, lo, {b, a}, {d});
}

AlgebraElement random_variable_or_product(const RingSpec& ring, SeededRng& rng) {
  if (ring.num_vars == 0) invalid_input("the ring has no variables");
  Poly x = Poly::variable(ring, rng.below(ring.num_vars));
  if (rng.chance(1, 2)) x = x * Poly::variable(ring, rng.below(ring.num_vars));
  return AlgebraElement{x, 0};
}

}  // namespace ghostkit
