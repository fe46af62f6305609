#pragma once

#include <string>
#include <vector>

#include "ghostkit/level.hpp"

namespace fixtures {

using namespace ghostkit;

inline RingSpec fp(std::size_t n, MonomialOrder order = MonomialOrder::GRevLex) {
  return RingSpec::parse("Fp[" + std::to_string(n) + "],p=32003", order);
}

inline RingSpec qq(std::size_t n, MonomialOrder order = MonomialOrder::GRevLex) {
  return RingSpec::parse("Q[" + std::to_string(n) + "]", order);
}

inline Poly P(const RingSpec& ring, const std::string& text) { return parse_poly(text, ring); }

inline AlgebraElement el(const RingSpec& ring, const std::string& text) { return {parse_poly(text, ring), 0}; }

inline std::vector<AlgebraElement> seq(const RingSpec& ring, const std::string& text) {
  return as_elements(parse_poly_list(text, ring));
}

inline FreeMap row(const RingSpec& ring, const std::vector<std::string>& entries) {
  std::vector<Poly> r;
  for (const auto& e : entries) r.push_back(P(ring, e));
  return FreeMap::from_rows(ring, {r});
}

inline FreeMap matrix(const RingSpec& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& e : r) out.back().push_back(P(ring, e));
  }
  return FreeMap::from_rows(ring, out);
}

inline FreeComplex A(const RingSpec& ring) { return FreeComplex::unit(ring); }

/// Ranks of X listed from lo to hi.
inline std::vector<std::size_t> ranks(const FreeComplex& x) {
  std::vector<std::size_t> out;
  for (int i = x.lo(); i <= x.hi(); ++i) out.push_back(x.rank(i));
  return out;
}

/// Nonzero homology degrees.
inline std::vector<int> homology_support(const FreeComplex& x) {
  std::vector<int> out;
  for (int i = x.lo(); i <= x.hi(); ++i)
    if (!is_zero_module(homology(x, i))) out.push_back(i);
  return out;
}

}  // namespace fixtures
