#include "ghostkit/groebner.hpp"

#include <algorithm>

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace detail {

namespace {

std::strong_ordering pot_compare(std::uint32_t pa, const Monomial& ma, std::uint32_t pb, const Monomial& mb,
                                 MonomialOrder order) {
  if (pa != pb) return pb <=> pa;
  return mono_compare(ma, mb, order);
}

}  // namespace

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({static_cast<std::uint32_t>(i), t.mono, t.coeff});
  return out;
}

Vec to_dense(const SparseVec& v, const RingSpec& ring, std::size_t rank) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps.at(t.pos).push_back({t.coeff, t.mono});
  Vec out;
  out.reserve(rank);
  for (auto& c : comps) out.push_back(Poly::from_terms(ring, std::move(c)));
  return out;
}

}  // namespace detail

namespace {

using detail::ModuleTerm;
using detail::SparseVec;

struct Arith {
  Field field;
  MonomialOrder order;

  std::strong_ordering cmp(const ModuleTerm& a, std::uint32_t pb, const Monomial& mb) const {
    if (a.pos != pb) return pb <=> a.pos;
    return mono_compare(a.mono, mb, order);
  }

  // a[a0..] - c * m * b[b0..]
  SparseVec sub_mul(const SparseVec& a, std::size_t a0, const Scalar& c, const Monomial& m, const SparseVec& b,
                    std::size_t b0) const {
    SparseVec out;
    out.reserve(a.size() - a0 + b.size() - b0);
    std::size_t i = a0, j = b0;
    while (i < a.size() && j < b.size()) {
      Monomial bm = b[j].mono * m;
      auto ord = cmp(a[i], b[j].pos, bm);
      if (ord > 0) {
        out.push_back(a[i++]);
      } else if (ord < 0) {
        out.push_back({b[j].pos, bm, field.neg(field.mul(c, b[j].coeff))});
        ++j;
      } else {
        Scalar s = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
        if (!field.is_zero(s)) out.push_back({a[i].pos, a[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].pos, b[j].mono * m, field.neg(field.mul(c, b[j].coeff))});
    return out;
  }

  SparseVec times(const SparseVec& g, const Monomial& m) const {
    SparseVec out = g;
    for (auto& t : out) t.mono = t.mono * m;
    return out;
  }

  SparseVec make_monic(SparseVec v) const {
    if (v.empty() || field.is_one(v.front().coeff)) return v;
    Scalar inv = field.inv(v.front().coeff);
    for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
    return v;
  }
};

class Reducer {
 public:
  Reducer(const Arith& arith, const std::vector<SparseVec>& basis, std::size_t rank)
      : arith_(arith), basis_(basis), by_pos_(rank) {
    for (std::size_t k = 0; k < basis.size(); ++k) by_pos_[basis[k].front().pos].push_back(k);
  }

  void add(std::size_t k) { by_pos_[basis_[k].front().pos].push_back(k); }

  // Index of a basis element whose lead divides t, skipping `exclude`.
  std::optional<std::size_t> find(const ModuleTerm& t, std::size_t exclude = SIZE_MAX) const {
    for (std::size_t k : by_pos_[t.pos])
      if (k != exclude && basis_[k].front().mono.divides(t.mono)) return k;
    return std::nullopt;
  }

  SparseVec reduce_full(SparseVec v, std::size_t exclude = SIZE_MAX) const {
    SparseVec rem;
    std::size_t head = 0;
    while (head < v.size()) {
      const ModuleTerm& lt = v[head];
      if (auto k = find(lt, exclude)) {
        const SparseVec& g = basis_[*k];
        Scalar c = arith_.field.div(lt.coeff, g.front().coeff);
        Monomial m = g.front().mono.quotient_of(lt.mono);
        v = arith_.sub_mul(v, head + 1, c, m, g, 1);
        head = 0;
      } else {
        rem.push_back(lt);
        ++head;
      }
    }
    return rem;
  }

  // Reduces only while the lead sits in a position below `limit`; returns
  // nullopt if such a lead is irreducible.
  std::optional<SparseVec> reduce_below(SparseVec v, std::uint32_t limit) const {
    while (!v.empty() && v.front().pos < limit) {
      auto k = find(v.front());
      if (!k) return std::nullopt;
      const SparseVec& g = basis_[*k];
      Scalar c = arith_.field.div(v.front().coeff, g.front().coeff);
      Monomial m = g.front().mono.quotient_of(v.front().mono);
      v = arith_.sub_mul(v, 1, c, m, g, 1);
    }
    return v;
  }

  const std::vector<std::size_t>& at_pos(std::uint32_t pos) const { return by_pos_[pos]; }

 private:
  const Arith& arith_;
  const std::vector<SparseVec>& basis_;
  std::vector<std::vector<std::size_t>> by_pos_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  std::uint32_t pos;
  Monomial lcm;
};

}  // namespace

ModuleGB ModuleGB::compute(const RingSpec& ring, std::size_t rank, const std::vector<Vec>& gens) {
  for (const auto& g : gens) {
    if (g.size() != rank) invalid_input("generator of wrong rank for Gröbner basis");
    for (const auto& p : g)
      if (!(p.ring() == ring)) invalid_input("generators over mixed rings");
  }
  const Arith arith{Field(ring), ring.order};
  const bool ideal_case = rank == 1;

  std::vector<SparseVec> basis;
  Reducer reducer(arith, basis, rank);
  std::vector<std::vector<char>> pending;
  std::vector<Pair> pairs;

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[b][a] != 0 : pending[a][b] != 0;
  };

  auto add_element = [&](SparseVec h) {
    h = arith.make_monic(std::move(h));
    const std::size_t k = basis.size();
    const std::uint32_t pos = h.front().pos;
    const Monomial lead = h.front().mono;
    basis.push_back(std::move(h));
    pending.emplace_back(k, 0);
    for (std::size_t i : reducer.at_pos(pos)) {
      const Monomial& li = basis[i].front().mono;
      if (ideal_case && li.coprime(lead)) continue;
      pairs.push_back({i, k, pos, li.lcm(lead)});
      pending[k][i] = 1;
    }
    reducer.add(k);
  };

  for (const auto& g : gens) {
    SparseVec h = reducer.reduce_full(detail::to_sparse(g));
    if (!h.empty()) add_element(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      auto c = it->pos != best->pos ? best->pos <=> it->pos : mono_compare(it->lcm, best->lcm, ring.order);
      if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
    }
    const Pair pr = *best;
    pairs.erase(best);
    pending[pr.j][pr.i] = 0;

    bool chain = false;
    for (std::size_t k : reducer.at_pos(pr.pos)) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].front().mono.divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) {
        chain = true;
        break;
      }
    }
    if (chain) continue;

    const SparseVec& gi = basis[pr.i];
    const SparseVec& gj = basis[pr.j];
    SparseVec s = arith.sub_mul(arith.times(gi, gi.front().mono.quotient_of(pr.lcm)), 0, arith.field.one(),
                                gj.front().mono.quotient_of(pr.lcm), gj, 0);
    SparseVec h = reducer.reduce_full(std::move(s));
    if (!h.empty()) add_element(std::move(h));
  }

  // minimal basis, then tail reduction
  std::vector<SparseVec> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const ModuleTerm& lk = basis[k].front();
    bool redundant = false;
    for (std::size_t l : reducer.at_pos(lk.pos))
      if (l != k && basis[l].front().mono.divides(lk.mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[k]);
  }
  ModuleGB out(ring, rank);
  Reducer tail(arith, minimal, rank);
  for (std::size_t k = 0; k < minimal.size(); ++k) out.basis_.push_back(tail.reduce_full(minimal[k], k));
  std::sort(out.basis_.begin(), out.basis_.end(), [&](const SparseVec& a, const SparseVec& b) {
    return detail::pot_compare(a.front().pos, a.front().mono, b.front().pos, b.front().mono, ring.order) > 0;
  });
  return out;
}

std::vector<Vec> ModuleGB::generators() const {
  std::vector<Vec> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(detail::to_dense(b, ring_, rank_));
  return out;
}

std::vector<Poly> ModuleGB::polys() const {
  std::vector<Poly> out;
  for (const auto& g : generators()) out.push_back(g.at(0));
  return out;
}

Vec ModuleGB::normal_form(const Vec& v) const {
  if (v.size() != rank_) invalid_input("vector rank " + std::to_string(v.size()) + " does not match basis rank " +
                                       std::to_string(rank_));
  for (const auto& p : v)
    if (!(p.ring() == ring_)) invalid_input("vector over a different ring");
  const Arith arith{Field(ring_), ring_.order};
  Reducer reducer(arith, basis_, rank_);
  return detail::to_dense(reducer.reduce_full(detail::to_sparse(v)), ring_, rank_);
}

bool ModuleGB::is_everything() const {
  std::vector<char> hit(rank_, 0);
  for (const auto& b : basis_)
    if (b.front().mono.is_one()) hit[b.front().pos] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

ModuleGB groebner_basis(const std::vector<Poly>& gens) {
  if (gens.empty()) invalid_input("groebner_basis needs at least one generator to fix the ring");
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(Vec{g});
  return ModuleGB::compute(gens.front().ring(), 1, vs);
}

Vec normal_form(const Vec& v, const ModuleGB& gb) { return gb.normal_form(v); }

Poly normal_form(const Poly& p, const ModuleGB& gb) { return gb.normal_form(Vec{p}).at(0); }

ModuleGB module_groebner(const FreeMap& image_of) {
  return ModuleGB::compute(image_of.ring(), image_of.target_rank(), image_of.columns());
}

namespace {

ModuleGB graph_basis(const FreeMap& f) {
  return ModuleGB::compute(f.ring(), f.target_rank() + f.source_rank(),
                           vconcat(f, FreeMap::identity(f.ring(), f.source_rank())).columns());
}

}  // namespace

FreeMap syzygies(const FreeMap& f) {
  const std::size_t t = f.target_rank(), s = f.source_rank();
  if (f.is_zero()) return FreeMap::identity(f.ring(), s);
  ModuleGB gb = graph_basis(f);
  std::vector<Vec> kernel;
  for (const auto& g : gb.sparse_basis()) {
    if (g.front().pos < t) continue;
    Vec full = detail::to_dense(g, f.ring(), t + s);
    kernel.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(t), full.end());
  }
  return FreeMap::from_columns(f.ring(), s, kernel);
}

Lifter::Lifter(const FreeMap& f) : f_(f), gb_(graph_basis(f)) {}

std::optional<Vec> Lifter::lift(const Vec& v) const {
  const std::size_t t = f_.target_rank(), s = f_.source_rank();
  if (v.size() != t) invalid_input("lift target has length " + std::to_string(v.size()) + ", map has target rank " +
                                   std::to_string(t));
  const Arith arith{Field(f_.ring()), f_.ring().order};
  Reducer reducer(arith, gb_.sparse_basis(), t + s);
  auto r = reducer.reduce_below(detail::to_sparse(v), static_cast<std::uint32_t>(t));
  if (!r) return std::nullopt;
  Vec full = detail::to_dense(*r, f_.ring(), t + s);
  Vec w;
  w.reserve(s);
  for (std::size_t j = 0; j < s; ++j) w.push_back(-full[t + j]);
  return w;
}

std::optional<Vec> lift_membership(const Vec& v, const FreeMap& f) { return Lifter(f).lift(v); }

}  // namespace ghostkit
