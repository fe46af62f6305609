#include "ghostkit/level.hpp"

#include <algorithm>
#include <map>

#include "ghostkit/error.hpp"
#include "ghostkit/sampling.hpp"

namespace ghostkit {

namespace {

bool all_zero(const std::vector<GhostCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const GhostCheck& c) { return c.zero; });
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

std::vector<std::size_t> all_of(std::size_t n) { return all_but(n, n); }

FreeMap select(const FreeMap& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  FreeMap out(m.ring(), rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(rows[r], cols[c]);
  return out;
}

bool is_unit_generator(const FreeComplex& g) { return g == FreeComplex::unit(g.ring()); }

struct Cancellation {
  int degree;
  std::size_t row;
  std::size_t col;
};

std::optional<Cancellation> find_unit_entry(const FreeComplex& x) {
  for (int k = x.lo() + 1; k <= x.hi(); ++k) {
    FreeMap d = x.d(k);
    for (std::size_t r = 0; r < d.target_rank(); ++r)
      for (std::size_t c = 0; c < d.source_rank(); ++c)
        if (d.at(r, c).is_unit()) return Cancellation{k, r, c};
  }
  return std::nullopt;
}

// Gaussian elimination on the unit entry φ = d_k[a, b]. With δ the rest of
// row a, γ the rest of column b and ε the remaining block, the new d_k is
// ε - γ φ^{-1} δ.
Minimized cancel(const FreeComplex& x, const Cancellation& at) {
  const RingSpec& ring = x.ring();
  const int k = at.degree;
  const FreeMap dk = x.d(k);
  const std::size_t nk = x.rank(k);
  const std::size_t nk1 = x.rank(k - 1);
  const auto keep_k = all_but(nk, at.col);
  const auto keep_k1 = all_but(nk1, at.row);

  Field field(ring);
  Poly phi_inv = Poly::constant(ring, field.inv(dk.at(at.row, at.col).lead().coeff));
  FreeMap delta = select(dk, {at.row}, keep_k);
  FreeMap gamma = select(dk, keep_k1, {at.col});
  FreeMap eps = select(dk, keep_k1, keep_k);
  FreeMap gamma_phi = gamma.scaled(phi_inv);

  std::vector<std::size_t> ranks;
  std::vector<FreeMap> diffs;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    ranks.push_back(x.rank(i) - (i == k || i == k - 1 ? 1 : 0));
    if (i == x.lo()) continue;
    FreeMap d = x.d(i);
    if (i == k) d = eps - gamma_phi * delta;
    else if (i == k + 1) d = select(d, keep_k, all_of(d.source_rank()));
    else if (i == k - 1) d = select(d, all_of(d.target_rank()), keep_k1);
    diffs.push_back(std::move(d));
  }
  FreeComplex y(ring, x.lo(), std::move(ranks), std::move(diffs));

  std::map<int, FreeMap> to, from;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    FreeMap id = FreeMap::identity(ring, x.rank(i));
    if (i == k) {
      to.emplace(i, select(id, keep_k, all_of(nk)));
      FreeMap g = select(id, all_of(nk), keep_k);
      g.place(-(delta.scaled(phi_inv)), at.col, 0);
      from.emplace(i, std::move(g));
    } else if (i == k - 1) {
      FreeMap f = select(id, keep_k1, all_of(nk1));
      f.place(-gamma_phi, 0, at.row);
      to.emplace(i, std::move(f));
      from.emplace(i, select(id, all_of(nk1), keep_k1));
    } else {
      to.emplace(i, id);
      from.emplace(i, id);
    }
  }
  Minimized out{y, ChainMap(x, y, std::move(to)), ChainMap(y, x, std::move(from)), 1};
  return out;
}

FreeComplex apply_step(const BuildPlan& plan, const std::vector<FreeComplex>& results, const PlanStep& step) {
  auto operand = [&](std::size_t k) -> const FreeComplex& {
    if (k >= step.operands.size() || step.operands[k] >= results.size())
      invalid_input(std::string("plan step ") + to_string(step.op) + " refers to a missing operand");
    return results[step.operands[k]];
  };
  switch (step.op) {
    case PlanOp::TakeG:
      return plan.generator;
    case PlanOp::Shift:
      return shift(operand(0), step.shift);
    case PlanOp::Sum: {
      FreeComplex acc(plan.generator.ring());
      for (std::size_t k = 0; k < step.operands.size(); ++k) acc = direct_sum(acc, operand(k));
      return acc;
    }
    case PlanOp::ConeWith: {
      if (!step.map) invalid_input("cone-with step without a map");
      if (!(step.map->source() == operand(0)) || !(step.map->target() == operand(1)))
        invalid_input("cone-with map does not go between its operands");
      return cone(*step.map).cone;
    }
    case PlanOp::Summand: {
      if (!step.map || !step.section) invalid_input("summand step needs both maps");
      const FreeComplex& r = operand(0);
      const FreeComplex& x = step.map->source();
      if (!(step.map->target() == r) || !(step.section->source() == r) || !(step.section->target() == x))
        invalid_input("summand maps do not match their operand");
      if (!is_nullhomotopic(*step.section * *step.map - ChainMap::identity(x)) ||
          !is_nullhomotopic(*step.map * *step.section - ChainMap::identity(r)))
        invalid_input("summand maps are not inverse homotopy equivalences");
      return x;
    }
  }
  internal_error("unknown plan step");
}

}  // namespace

std::vector<GhostCheck> ghost_checks(const FreeComplex& g, const ChainMap& f) {
  FreeComplex hx = hom_complex(g, f.source());
  FreeComplex hy = hom_complex(g, f.target());
  std::vector<GhostCheck> out;
  for (int n = hx.lo(); n <= hx.hi(); ++n) {
    if (hx.rank(n) == 0) continue;
    GhostCheck check{n, true};
    if (hy.rank(n) > 0) {
      FreeMap pushed = hom_postcompose(g, f, n) * syzygies(hx.d(n));
      if (!pushed.is_zero()) {
        ModuleGB boundaries = module_groebner(hy.d(n + 1));
        for (const auto& col : pushed.columns())
          if (!boundaries.contains(col)) {
            check.zero = false;
            break;
          }
      }
    }
    out.push_back(check);
  }
  return out;
}

bool is_ghost(const FreeComplex& g, const ChainMap& f) { return all_zero(ghost_checks(g, f)); }

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NotGhost: return "NotGhost";
    case FailureKind::CompositionZero: return "CompositionZero";
  }
  return "?";
}

std::string Failure::describe() const {
  if (kind == FailureKind::NotGhost) return std::string(to_string(kind)) + " " + std::to_string(factor);
  return to_string(kind);
}

GhostCertificate ghost_certificate(const FreeComplex& g, const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                                   const std::vector<std::optional<unsigned>>& overrides) {
  if (xs.empty()) invalid_input("the sequence must be nonempty");
  if (!(g.ring() == m.ring())) invalid_input("generator and module live over different rings");
  GhostCertificate cert;
  cert.generator = g;
  cert.tower = build_tower_auto(g, m, xs, overrides);
  for (std::size_t s = 0; s < cert.tower.length(); ++s) {
    cert.ghost_evidence.push_back(ghost_checks(g, cert.tower.factors[s]));
    if (!cert.failure && !all_zero(cert.ghost_evidence.back()))
      cert.failure = Failure{FailureKind::NotGhost, s + 1};
  }
  cert.composition = ghost_candidate_composition(cert.tower);
  cert.composition_nullhomotopic = is_nullhomotopic(cert.composition);
  if (!cert.failure && cert.composition_nullhomotopic) cert.failure = Failure{FailureKind::CompositionZero, 0};
  return cert;
}

bool replay_certificate(const GhostCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const KoszulTower& t = cert.tower;
  if (t.length() == 0) return fail("empty sequence");
  if (t.exponents.size() != t.length() || t.stages.size() != t.length() + 1 || t.factors.size() != t.length() ||
      cert.ghost_evidence.size() != t.length())
    return fail("record lengths disagree with the sequence");
  KoszulTower rebuilt = build_tower(t.base, t.elements, t.exponents);
  for (std::size_t s = 0; s <= t.length(); ++s)
    if (!(rebuilt.stages[s] == t.stages[s])) return fail("stage " + std::to_string(s) + " differs");
  std::optional<Failure> failure;
  for (std::size_t s = 0; s < t.length(); ++s) {
    if (!(rebuilt.factors[s] == t.factors[s])) return fail("factor " + std::to_string(s + 1) + " differs");
    if (t.eps_maps.size() == t.length() && !(rebuilt.eps_maps[s] == t.eps_maps[s]))
      return fail("eps map " + std::to_string(s + 1) + " differs");
    auto checks = ghost_checks(cert.generator, rebuilt.factors[s]);
    if (checks != cert.ghost_evidence[s]) return fail("ghost checks of factor " + std::to_string(s + 1) + " differ");
    if (!failure && !all_zero(checks)) failure = Failure{FailureKind::NotGhost, s + 1};
  }
  ChainMap comp = ghost_candidate_composition(rebuilt);
  if (!(comp == cert.composition)) return fail("composition differs");
  bool null = is_nullhomotopic(comp);
  if (null != cert.composition_nullhomotopic) return fail("null-homotopy verdict differs");
  if (!failure && null) failure = Failure{FailureKind::CompositionZero, 0};
  if (failure != cert.failure) return fail("failure verdict differs");
  return true;
}

const char* to_string(PlanOp op) {
  switch (op) {
    case PlanOp::TakeG: return "take-G";
    case PlanOp::Shift: return "shift";
    case PlanOp::Sum: return "sum";
    case PlanOp::ConeWith: return "cone-with";
    case PlanOp::Summand: return "summand";
  }
  return "?";
}

PlanOp parse_plan_op(const std::string& tag) {
  for (PlanOp op : {PlanOp::TakeG, PlanOp::Shift, PlanOp::Sum, PlanOp::ConeWith, PlanOp::Summand})
    if (tag == to_string(op)) return op;
  invalid_input("unknown plan operation '" + tag + "'");
}

FreeComplex replay_plan(const BuildPlan& plan) {
  if (plan.steps.empty()) invalid_input("empty build plan");
  std::vector<FreeComplex> results;
  std::size_t cones = 0;
  for (const auto& step : plan.steps) {
    results.push_back(apply_step(plan, results, step));
    if (step.op == PlanOp::ConeWith) ++cones;
  }
  if (cones != plan.cone_count) invalid_input("cone_count does not match the steps");
  return results.back();
}

Minimized minimize(const FreeComplex& x) {
  Minimized acc{x, ChainMap::identity(x), ChainMap::identity(x), 0};
  while (auto at = find_unit_entry(acc.complex)) {
    Minimized step = cancel(acc.complex, *at);
    acc.to_min = step.to_min * acc.to_min;
    acc.from_min = acc.from_min * step.from_min;
    acc.complex = std::move(step.complex);
    ++acc.cancellations;
  }
  return acc;
}

LevelBound level_upper_bound(const FreeComplex& g, const FreeComplex& x) {
  if (!is_unit_generator(g))
    throw Error(ErrorKind::UnsupportedGenerator, "upper bounds are only constructed for G = A in degree 0");
  if (!(g.ring() == x.ring())) invalid_input("generator and target live over different rings");

  LevelBound out;
  Minimized mn = minimize(x);
  const FreeComplex& y = mn.complex;
  BuildPlan& plan = out.plan;
  plan.generator = g;
  std::vector<FreeComplex> results;
  auto add = [&](PlanStep step) {
    results.push_back(apply_step(plan, results, step));
    plan.steps.push_back(std::move(step));
    return plan.steps.size() - 1;
  };

  const std::size_t take = add(PlanStep{PlanOp::TakeG, {}, 0, {}, {}});
  std::map<int, std::size_t> shifted{{0, take}};
  auto shifted_g = [&](int k) {
    auto it = shifted.find(k);
    if (it != shifted.end()) return it->second;
    std::size_t idx = add(PlanStep{PlanOp::Shift, {take}, k, {}, {}});
    shifted.emplace(k, idx);
    return idx;
  };
  auto block = [&](int k, std::size_t r) {
    std::size_t s = shifted_g(k);
    return add(PlanStep{PlanOp::Sum, std::vector<std::size_t>(r, s), 0, {}, {}});
  };

  std::size_t cur;
  if (y.is_zero()) {
    cur = add(PlanStep{PlanOp::Sum, {}, 0, {}, {}});
  } else {
    cur = block(y.lo(), y.rank(y.lo()));
    for (int k = y.lo() + 1; k <= y.hi(); ++k) {
      const std::size_t r = y.rank(k);
      if (r == 0) continue;
      FreeMap dk = y.d(k);
      if (dk.is_zero()) {
        std::size_t p = block(k, r);
        cur = add(PlanStep{PlanOp::Sum, {cur, p}, 0, {}, {}});
      } else {
        std::size_t p = block(k - 1, r);
        ChainMap attach(results[p], results[cur], {{k - 1, -dk}});
        cur = add(PlanStep{PlanOp::ConeWith, {p, cur}, 0, std::move(attach), {}});
        ++plan.cone_count;
      }
    }
  }
  if (!(results[cur] == y)) internal_error("cone peeling did not reproduce the minimized complex");
  if (mn.cancellations > 0) add(PlanStep{PlanOp::Summand, {cur}, 0, mn.to_min, mn.from_min});
  out.level = plan.cone_count + 1;
  out.minimized = y;
  return out;
}

DepthGentimeReport verify_depth_leq_gentime(const FreeComplex& g, const FreeComplex& m, const IdealGens& a,
                                            std::uint64_t seed) {
  ModulePresentation endo = graded_hom(m, m).total();
  if (is_zero_module(quotient(endo, a.polys())))
    throw Error(ErrorKind::PreconditionFailed, "a·Hom*(M,M) = Hom*(M,M)");
  DepthGentimeReport rep;
  rep.depth = depth(a, endo);
  if (rep.depth.infinite) internal_error("infinite depth despite a·Hom*(M,M) != Hom*(M,M)");
  if (rep.depth.value == 0) {
    rep.holds = true;
    return rep;
  }
  auto seq = regular_sequence_in(a, endo, rep.depth.value, seed);
  if (!seq) internal_error("no regular sequence of length " + rep.depth.to_string() + " found in the ideal");
  rep.sequence = *seq;
  rep.certificate = ghost_certificate(g, m, rep.sequence);
  if (is_unit_generator(g)) rep.tower_top_level_upper = level_upper_bound(g, rep.certificate->tower.top()).level;
  rep.holds = rep.certificate->valid() && rep.certificate->implied_bound() == rep.depth.value &&
              (!rep.tower_top_level_upper ||
               *rep.tower_top_level_upper >= rep.certificate->implied_level_lower_bound());
  return rep;
}

RdimReport rdim_report(const RingSpec& ring, const RdimOptions& options) {
  ring.validate();
  RdimReport rep;
  rep.ring = ring;
  rep.dim = ring.num_vars;
  const FreeComplex a = FreeComplex::unit(ring);
  bool ok = true;
  if (rep.dim > 0) {
    std::vector<AlgebraElement> vars;
    for (std::size_t i = 0; i < rep.dim; ++i) vars.push_back(AlgebraElement{Poly::variable(ring, i), 0});
    rep.certificate = ghost_certificate(a, a, vars);
    ok = ok && rep.certificate->valid() && rep.certificate->implied_bound() == rep.dim;
    for (const auto& g : options.generators) {
      rep.generator_certificates.push_back(ghost_certificate(g, a, vars));
      ok = ok && rep.generator_certificates.back().valid();
    }
    FreeComplex kos = koszul_object(a, vars);
    rep.koszul_bound = level_upper_bound(a, kos);
    rep.tower_top_bound = level_upper_bound(a, rep.certificate->tower.top());
    rep.koszul_is_tower_top =
        sign_isomorphism(rep.certificate->tower.top(), shift(kos, -static_cast<int>(rep.dim))).has_value();
    ok = ok && rep.koszul_is_tower_top && rep.koszul_bound->level == rep.dim + 1 &&
         rep.tower_top_bound->level == rep.dim + 1;
    if (rep.certificate->valid()) rep.rdim_lower_bound = rep.certificate->implied_bound();
  }
  SeededRng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    FreeComplex x = random_perfect_complex(ring, rng);
    LevelBound b = level_upper_bound(a, x);
    rep.max_battery_level = std::max(rep.max_battery_level, b.level);
    ok = ok && b.level <= rep.dim + 1;
    rep.battery.push_back(BatteryEntry{std::move(x), std::move(b)});
  }
  rep.verified = ok;
  return rep;
}

}  // namespace ghostkit
