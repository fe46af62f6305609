#include "ghostkit/complex.hpp"

#include <algorithm>

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace {

Poly sign_poly(const RingSpec& ring, bool negative) { return Poly::from_int(ring, negative ? -1 : 1); }

bool odd(int n) { return n % 2 != 0; }

}  // namespace

FreeComplex::FreeComplex(const RingSpec& ring, int lo, std::vector<std::size_t> ranks, std::vector<FreeMap> diffs)
    : ring_(ring) {
  if (ranks.empty()) {
    if (!diffs.empty()) invalid_input("differentials given for an empty complex");
    return;
  }
  if (diffs.size() + 1 != ranks.size())
    invalid_input("a complex with " + std::to_string(ranks.size()) + " terms needs " +
                  std::to_string(ranks.size() - 1) + " differentials");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].source_rank() != ranks[k + 1] || diffs[k].target_rank() != ranks[k])
      invalid_input("differential d_" + std::to_string(lo + 1 + static_cast<int>(k)) + " has the wrong shape");
    if (!(diffs[k].ring() == ring)) invalid_input("differential over a different ring");
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!(diffs[k] * diffs[k + 1]).is_zero())
      invalid_input("d_" + std::to_string(lo + 1 + static_cast<int>(k)) + " ∘ d_" +
                    std::to_string(lo + 2 + static_cast<int>(k)) + " is not zero");
  std::size_t first = 0, last = ranks.size();
  while (first < last && ranks[first] == 0) ++first;
  while (last > first && ranks[last - 1] == 0) --last;
  if (first == last) return;
  lo_ = lo + static_cast<int>(first);
  hi_ = lo + static_cast<int>(last) - 1;
  ranks_.assign(ranks.begin() + static_cast<std::ptrdiff_t>(first), ranks.begin() + static_cast<std::ptrdiff_t>(last));
  diffs_.assign(diffs.begin() + static_cast<std::ptrdiff_t>(first),
                diffs.begin() + static_cast<std::ptrdiff_t>(last - 1));
}

FreeComplex FreeComplex::concentrated(const RingSpec& ring, int degree, std::size_t rank) {
  return FreeComplex(ring, degree, {rank}, {});
}

std::size_t FreeComplex::rank(int i) const {
  if (i < lo_ || i > hi_) return 0;
  return ranks_[static_cast<std::size_t>(i - lo_)];
}

std::size_t FreeComplex::total_rank() const {
  std::size_t s = 0;
  for (auto r : ranks_) s += r;
  return s;
}

FreeMap FreeComplex::d(int i) const {
  if (i <= lo_ || i > hi_) return FreeMap(ring_, rank(i - 1), rank(i));
  return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

bool FreeComplex::operator==(const FreeComplex& other) const {
  return ring_ == other.ring_ && lo_ == other.lo_ && hi_ == other.hi_ && ranks_ == other.ranks_ &&
         diffs_ == other.diffs_;
}

ChainMap::ChainMap(FreeComplex source, FreeComplex target, std::map<int, FreeMap> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [i, f] : components) {
    if (f.source_rank() != source_.rank(i) || f.target_rank() != target_.rank(i))
      invalid_input("chain map component in degree " + std::to_string(i) + " has the wrong shape");
    if (!f.is_zero()) components_.emplace(i, std::move(f));
  }
  const int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi());
  for (int i = lo; i <= hi + 1; ++i) {
    if (!(target_.d(i) * component(i) == component(i - 1) * source_.d(i)))
      invalid_input("chain map does not commute with the differentials in degree " + std::to_string(i));
  }
}

ChainMap ChainMap::identity(const FreeComplex& x) { return scalar(x, Poly::from_int(x.ring(), 1)); }

ChainMap ChainMap::zero(const FreeComplex& x, const FreeComplex& y) { return ChainMap(x, y, {}); }

ChainMap ChainMap::scalar(const FreeComplex& x, const Poly& c) {
  std::map<int, FreeMap> comps;
  for (int i = x.lo(); i <= x.hi(); ++i) comps.emplace(i, FreeMap::scalar(x.ring(), x.rank(i), c));
  return ChainMap(x, x, std::move(comps));
}

FreeMap ChainMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return FreeMap(source_.ring(), target_.rank(i), source_.rank(i));
}

bool ChainMap::is_zero() const { return components_.empty(); }

ChainMap ChainMap::operator*(const ChainMap& other) const {
  if (!(other.target_ == source_)) invalid_input("composing chain maps whose complexes do not match");
  std::map<int, FreeMap> comps;
  for (const auto& [i, f] : components_) {
    auto it = other.components_.find(i);
    if (it != other.components_.end()) comps.emplace(i, f * it->second);
  }
  return ChainMap(other.source_, target_, std::move(comps));
}

ChainMap ChainMap::operator+(const ChainMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_))
    invalid_input("adding chain maps between different complexes");
  std::map<int, FreeMap> comps = components_;
  for (const auto& [i, f] : other.components_) {
    auto it = comps.find(i);
    if (it == comps.end()) comps.emplace(i, f);
    else it->second = it->second + f;
  }
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& other) const {
  return *this + other.scaled(Poly::from_int(source_.ring(), -1));
}

ChainMap ChainMap::scaled(const Poly& c) const {
  std::map<int, FreeMap> comps;
  for (const auto& [i, f] : components_) comps.emplace(i, f.scaled(c));
  return ChainMap(source_, target_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& other) const {
  return source_ == other.source_ && target_ == other.target_ && components_ == other.components_;
}

FreeComplex shift(const FreeComplex& x, int n) {
  if (x.is_zero()) return x;
  std::vector<std::size_t> ranks;
  std::vector<FreeMap> diffs;
  const Poly sign = sign_poly(x.ring(), odd(n));
  for (int i = x.lo(); i <= x.hi(); ++i) {
    ranks.push_back(x.rank(i));
    if (i > x.lo()) diffs.push_back(odd(n) ? x.d(i).scaled(sign) : x.d(i));
  }
  return FreeComplex(x.ring(), x.lo() + n, std::move(ranks), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int n) {
  std::map<int, FreeMap> comps;
  for (int i = f.source().lo(); i <= f.source().hi(); ++i) comps.emplace(i + n, f.component(i));
  return ChainMap(shift(f.source(), n), shift(f.target(), n), std::move(comps));
}

namespace {

int span_lo(const FreeComplex& x, const FreeComplex& y) {
  if (x.is_zero()) return y.lo();
  if (y.is_zero()) return x.lo();
  return std::min(x.lo(), y.lo());
}

int span_hi(const FreeComplex& x, const FreeComplex& y) {
  if (x.is_zero()) return y.hi();
  if (y.is_zero()) return x.hi();
  return std::max(x.hi(), y.hi());
}

}  // namespace

FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const int lo = span_lo(x, y), hi = span_hi(x, y);
  std::vector<std::size_t> ranks;
  std::vector<FreeMap> diffs;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(x.rank(i) + y.rank(i));
    if (i > lo) diffs.push_back(direct_sum(x.d(i), y.d(i)));
  }
  return FreeComplex(x.ring(), lo, std::move(ranks), std::move(diffs));
}

ConeTriangle cone(const ChainMap& f) {
  const FreeComplex& x = f.source();
  const FreeComplex& y = f.target();
  const RingSpec& ring = x.ring();
  const Poly minus_one = Poly::from_int(ring, -1);
  FreeComplex sx = shift(x, 1);
  if (sx.is_zero() && y.is_zero()) {
    FreeComplex zero(ring);
    return {zero, ChainMap::zero(y, zero), ChainMap::zero(zero, sx)};
  }
  const int lo = span_lo(sx, y), hi = span_hi(sx, y);
  std::vector<std::size_t> ranks;
  std::vector<FreeMap> diffs;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(x.rank(i - 1) + y.rank(i));
    if (i == lo) continue;
    FreeMap d(ring, x.rank(i - 2) + y.rank(i - 1), x.rank(i - 1) + y.rank(i));
    d.place(x.d(i - 1).scaled(minus_one), 0, 0);
    d.place(f.component(i - 1).scaled(minus_one), x.rank(i - 2), 0);
    d.place(y.d(i), x.rank(i - 2), x.rank(i - 1));
    diffs.push_back(std::move(d));
  }
  FreeComplex c(ring, lo, std::move(ranks), std::move(diffs));

  std::map<int, FreeMap> incl, proj;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    FreeMap in(ring, c.rank(i), y.rank(i));
    in.place(FreeMap::identity(ring, y.rank(i)), x.rank(i - 1), 0);
    incl.emplace(i, std::move(in));
    FreeMap pr(ring, x.rank(i - 1), c.rank(i));
    pr.place(FreeMap::identity(ring, x.rank(i - 1)), 0, 0);
    proj.emplace(i, std::move(pr));
  }
  ChainMap inclusion(y, c, std::move(incl));
  ChainMap projection(c, sx, std::move(proj));
  return {std::move(c), std::move(inclusion), std::move(projection)};
}

HomLayout::HomLayout(const FreeComplex& x, const FreeComplex& y) : x_(x), y_(y) {
  if (x.is_zero() || y.is_zero()) {
    lo_ = 0;
    hi_ = -1;
  } else {
    lo_ = y.lo() - x.hi();
    hi_ = y.hi() - x.lo();
  }
}

std::size_t HomLayout::offset(int n, int i) const {
  std::size_t off = 0;
  for (int j = x_.lo(); j < i; ++j) off += x_.rank(j) * y_.rank(j + n);
  return off;
}

std::size_t HomLayout::rank(int n) const {
  if (n < lo_ || n > hi_) return 0;
  return offset(n, x_.hi() + 1);
}

Vec HomLayout::flatten(const std::map<int, FreeMap>& family, int n) const {
  Vec v = zero_vec(x_.ring(), rank(n));
  for (const auto& [i, f] : family) {
    if (f.source_rank() != x_.rank(i) || f.target_rank() != y_.rank(i + n))
      invalid_input("map family does not match the Hom complex layout");
    const std::size_t off = offset(n, i);
    for (std::size_t a = 0; a < f.target_rank(); ++a)
      for (std::size_t b = 0; b < f.source_rank(); ++b) v[off + a * f.source_rank() + b] = f.at(a, b);
  }
  return v;
}

Vec HomLayout::flatten(const ChainMap& f) const {
  std::map<int, FreeMap> family;
  for (int i = x_.lo(); i <= x_.hi(); ++i) family.emplace(i, f.component(i));
  return flatten(family, 0);
}

std::map<int, FreeMap> HomLayout::unflatten(const Vec& v, int n) const {
  if (v.size() != rank(n)) invalid_input("coordinate vector does not match the Hom complex layout");
  std::map<int, FreeMap> family;
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    const std::size_t rows = y_.rank(i + n), cols = x_.rank(i);
    if (rows == 0 || cols == 0) continue;
    FreeMap f(x_.ring(), rows, cols);
    const std::size_t off = offset(n, i);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) f.at(a, b) = v[off + a * cols + b];
    family.emplace(i, std::move(f));
  }
  return family;
}

FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y) {
  const RingSpec& ring = x.ring();
  HomLayout layout(x, y);
  if (layout.hi() < layout.lo()) return FreeComplex(ring);
  std::vector<std::size_t> ranks;
  std::vector<FreeMap> diffs;
  for (int n = layout.lo(); n <= layout.hi(); ++n) {
    ranks.push_back(layout.rank(n));
    if (n == layout.lo()) continue;
    FreeMap del(ring, layout.rank(n - 1), layout.rank(n));
    const bool flip = !odd(n);  // coefficient of f∘d_X is -(-1)^n
    for (int i = x.lo(); i <= x.hi(); ++i) {
      const std::size_t xi = x.rank(i), yin = y.rank(i + n);
      if (xi == 0 || yin == 0) continue;
      const std::size_t src_off = layout.offset(n, i);
      // d_Y ∘ E_ab lands in block i of degree n-1
      const FreeMap dy = y.d(i + n);
      const std::size_t t1 = layout.offset(n - 1, i);
      for (std::size_t a = 0; a < yin; ++a)
        for (std::size_t b = 0; b < xi; ++b)
          for (std::size_t c = 0; c < dy.target_rank(); ++c)
            if (!dy.at(c, a).is_zero()) del.at(t1 + c * xi + b, src_off + a * xi + b) += dy.at(c, a);
      // E_ab ∘ d_X lands in block i+1 of degree n-1
      const FreeMap dx = x.d(i + 1);
      const std::size_t xi1 = x.rank(i + 1);
      if (xi1 == 0) continue;
      const std::size_t t2 = layout.offset(n - 1, i + 1);
      for (std::size_t a = 0; a < yin; ++a)
        for (std::size_t b = 0; b < xi; ++b)
          for (std::size_t e = 0; e < xi1; ++e)
            if (!dx.at(b, e).is_zero())
              del.at(t2 + a * xi1 + e, src_off + a * xi + b) += flip ? -dx.at(b, e) : dx.at(b, e);
    }
    diffs.push_back(std::move(del));
  }
  return FreeComplex(ring, layout.lo(), std::move(ranks), std::move(diffs));
}

FreeMap hom_postcompose(const FreeComplex& g, const ChainMap& f, int n) {
  HomLayout src(g, f.source()), tgt(g, f.target());
  FreeMap m(g.ring(), tgt.rank(n), src.rank(n));
  for (int i = g.lo(); i <= g.hi(); ++i) {
    const std::size_t gi = g.rank(i), xin = f.source().rank(i + n), yin = f.target().rank(i + n);
    if (gi == 0 || xin == 0 || yin == 0) continue;
    const FreeMap fc = f.component(i + n);
    const std::size_t so = src.offset(n, i), to = tgt.offset(n, i);
    for (std::size_t a = 0; a < xin; ++a)
      for (std::size_t b = 0; b < gi; ++b)
        for (std::size_t c = 0; c < yin; ++c)
          if (!fc.at(c, a).is_zero()) m.at(to + c * gi + b, so + a * gi + b) = fc.at(c, a);
  }
  return m;
}

Subquotient homology_with_generators(const FreeComplex& x, int i) {
  if (x.rank(i) == 0) return {ModulePresentation::zero(x.ring()), FreeMap(x.ring(), 0, 0)};
  return subquotient_with_generators(syzygies(x.d(i)), x.d(i + 1));
}

ModulePresentation homology(const FreeComplex& x, int i) { return homology_with_generators(x, i).module; }

GradedModule graded_hom(const FreeComplex& g, const FreeComplex& m) {
  FreeComplex h = hom_complex(g, m);
  GradedModule out(g.ring());
  for (int n = h.lo(); n <= h.hi(); ++n) out.set(n, homology(h, n));
  return out;
}

std::optional<std::map<int, FreeMap>> find_nullhomotopy(const ChainMap& f) {
  HomLayout layout(f.source(), f.target());
  if (f.is_zero()) return std::map<int, FreeMap>{};
  FreeComplex h = hom_complex(f.source(), f.target());
  Vec v = layout.flatten(f);
  if (h.rank(1) == 0) return std::nullopt;
  auto w = Lifter(h.d(1)).lift(v);
  if (!w) return std::nullopt;
  return layout.unflatten(*w, 1);
}

bool is_nullhomotopic(const ChainMap& f) { return find_nullhomotopy(f).has_value(); }

std::optional<ChainMap> sign_isomorphism(const FreeComplex& x, const FreeComplex& y) {
  if (!(x.ring() == y.ring()) || x.lo() != y.lo() || x.hi() != y.hi()) return std::nullopt;
  std::map<int, std::size_t> base;
  std::size_t total = 0;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    if (x.rank(i) != y.rank(i)) return std::nullopt;
    base[i] = total;
    total += x.rank(i);
  }
  // Union-find with the parity of each node relative to its parent.
  std::vector<std::size_t> parent(total);
  std::vector<int> parity(total, 0);
  for (std::size_t v = 0; v < total; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    int acc = 0;
    std::size_t r = v;
    while (parent[r] != r) {
      acc ^= parity[r];
      r = parent[r];
    }
    return std::pair{r, acc};
  };
  for (int k = x.lo() + 1; k <= x.hi(); ++k) {
    FreeMap dx = x.d(k), dy = y.d(k);
    for (std::size_t a = 0; a < dx.target_rank(); ++a)
      for (std::size_t b = 0; b < dx.source_rank(); ++b) {
        const Poly& p = dx.at(a, b);
        const Poly& q = dy.at(a, b);
        if (p.is_zero() != q.is_zero()) return std::nullopt;
        if (p.is_zero()) continue;
        int want;
        if (q == p) want = 0;
        else if (q == -p) want = 1;
        else return std::nullopt;
        auto [ra, pa] = find(base[k - 1] + a);
        auto [rb, pb] = find(base[k] + b);
        if (ra == rb) {
          if ((pa ^ pb) != want) return std::nullopt;
        } else {
          parent[rb] = ra;
          parity[rb] = pa ^ pb ^ want;
        }
      }
  }
  std::map<int, FreeMap> comps;
  Field field(x.ring());
  for (int i = x.lo(); i <= x.hi(); ++i) {
    FreeMap s(x.ring(), x.rank(i), x.rank(i));
    for (std::size_t j = 0; j < x.rank(i); ++j)
      s.at(j, j) = Poly::from_int(x.ring(), find(base[i] + j).second ? -1 : 1);
    comps.emplace(i, std::move(s));
  }
  return ChainMap(x, y, std::move(comps));
}

}  // namespace ghostkit
