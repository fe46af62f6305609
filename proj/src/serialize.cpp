#include "ghostkit/serialize.hpp"

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid_input(std::string("JSON is missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    invalid_input(std::string("JSON field '") + key + "' has the wrong type: " + e.what());
  }
}

void check_schema(const Json& j, const char* kind) {
  if (get<int>(j, "schema_version") != kSchemaVersion)
    invalid_input("unsupported schema_version " + field(j, "schema_version").dump());
  if (get<std::string>(j, "kind") != kind) invalid_input(std::string("expected a ") + kind + " document");
}

Json header(const char* kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

Json sequence_json(const std::vector<AlgebraElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.value.to_string());
  return out;
}

Json checks_json(const std::vector<GhostCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"degree", c.degree}, {"verdict", c.zero ? "zero" : "nonzero"}});
  return out;
}

Json failure_json(const std::optional<Failure>& f) {
  if (!f) return nullptr;
  Json out{{"kind", to_string(f->kind)}, {"description", f->describe()}};
  if (f->kind == FailureKind::NotGhost) out["factor"] = f->factor;
  return out;
}

}  // namespace

Json to_json(const RingSpec& ring) {
  return {{"spec", ring.describe()},
          {"characteristic", ring.characteristic},
          {"num_vars", ring.num_vars},
          {"order", to_string(ring.order)}};
}

RingSpec ring_from_json(const Json& j) {
  return RingSpec::parse(get<std::string>(j, "spec"), parse_order(get<std::string>(j, "order")));
}

Json to_json(const FreeMap& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.target_rank(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.source_rank(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.target_rank()}, {"cols", m.source_rank()}, {"entries", std::move(rows)}};
}

FreeMap free_map_from_json(const Json& j, const RingSpec& ring) {
  auto rows = get<std::size_t>(j, "rows");
  auto cols = get<std::size_t>(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) invalid_input("matrix entries do not match 'rows'");
  FreeMap m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) invalid_input("matrix row does not match 'cols'");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!entries[r][c].is_string()) invalid_input("matrix entries must be polynomial strings");
      m.at(r, c) = parse_poly(entries[r][c].get<std::string>(), ring);
    }
  }
  return m;
}

Json to_json(const FreeComplex& x) {
  Json ranks = Json::array();
  Json diffs = Json::array();
  for (int i = x.lo(); i <= x.hi(); ++i) {
    ranks.push_back(x.rank(i));
    if (i > x.lo()) diffs.push_back(to_json(x.d(i)));
  }
  return {{"ring", to_json(x.ring())}, {"lo", x.is_zero() ? 0 : x.lo()}, {"ranks", ranks}, {"differentials", diffs}};
}

FreeComplex complex_from_json(const Json& j) {
  RingSpec ring = ring_from_json(field(j, "ring"));
  auto ranks = get<std::vector<std::size_t>>(j, "ranks");
  const Json& diffs = field(j, "differentials");
  if (!diffs.is_array() || diffs.size() != (ranks.empty() ? 0 : ranks.size() - 1))
    invalid_input("a complex needs one differential between consecutive ranks");
  std::vector<FreeMap> maps;
  for (const auto& d : diffs) maps.push_back(free_map_from_json(d, ring));
  if (ranks.empty()) return FreeComplex(ring);
  return FreeComplex(ring, get<int>(j, "lo"), std::move(ranks), std::move(maps));
}

Json components_to_json(const ChainMap& f) {
  Json out = Json::array();
  const FreeComplex& x = f.source();
  for (int i = x.lo(); i <= x.hi(); ++i) {
    FreeMap c = f.component(i);
    if (!c.is_zero()) out.push_back({{"degree", i}, {"matrix", to_json(c)}});
  }
  return out;
}

ChainMap chain_map_from_components(const Json& j, const FreeComplex& source, const FreeComplex& target) {
  if (!j.is_array()) invalid_input("chain map components must be an array");
  std::map<int, FreeMap> comps;
  for (const auto& c : j) {
    int deg = get<int>(c, "degree");
    if (!comps.emplace(deg, free_map_from_json(field(c, "matrix"), source.ring())).second)
      invalid_input("duplicate chain map component in degree " + std::to_string(deg));
  }
  return ChainMap(source, target, std::move(comps));
}

Json to_json(const ChainMap& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", components_to_json(f)}};
}

ChainMap chain_map_from_json(const Json& j) {
  return chain_map_from_components(field(j, "components"), complex_from_json(field(j, "source")),
                                   complex_from_json(field(j, "target")));
}

Json to_json(const ModulePresentation& m) {
  return {{"ambient_rank", m.ambient_rank}, {"relations", to_json(m.relations)}};
}

ModulePresentation presentation_from_json(const Json& j, const RingSpec& ring) {
  return ModulePresentation(get<std::size_t>(j, "ambient_rank"), free_map_from_json(field(j, "relations"), ring));
}

Json to_json(const BuildPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    Json step{{"op", to_string(s.op)}, {"operands", s.operands}};
    if (s.op == PlanOp::Shift) step["shift"] = s.shift;
    if (s.op == PlanOp::ConeWith && s.map) step["map"] = components_to_json(*s.map);
    if (s.op == PlanOp::Summand && s.map && s.section) {
      step["result"] = to_json(s.map->source());
      step["map"] = components_to_json(*s.map);
      step["section"] = components_to_json(*s.section);
    }
    steps.push_back(std::move(step));
  }
  return {{"generator", to_json(plan.generator)},
          {"steps", std::move(steps)},
          {"cone_count", plan.cone_count},
          {"level_upper_bound", plan.cone_count + 1}};
}

BuildPlan plan_from_json(const Json& j) {
  BuildPlan plan;
  plan.generator = complex_from_json(field(j, "generator"));
  plan.cone_count = get<std::size_t>(j, "cone_count");
  // Operand complexes are needed to rebuild the maps, so results are
  // recomputed step by step.
  std::vector<FreeComplex> results;
  auto operand = [&](const PlanStep& s, std::size_t k) -> const FreeComplex& {
    if (k >= s.operands.size() || s.operands[k] >= results.size()) invalid_input("plan operand out of range");
    return results[s.operands[k]];
  };
  for (const auto& js : field(j, "steps")) {
    PlanStep s;
    s.op = parse_plan_op(get<std::string>(js, "op"));
    s.operands = get<std::vector<std::size_t>>(js, "operands");
    FreeComplex result;
    switch (s.op) {
      case PlanOp::TakeG:
        result = plan.generator;
        break;
      case PlanOp::Shift:
        s.shift = get<int>(js, "shift");
        result = shift(operand(s, 0), s.shift);
        break;
      case PlanOp::Sum:
        result = FreeComplex(plan.generator.ring());
        for (std::size_t k = 0; k < s.operands.size(); ++k) result = direct_sum(result, operand(s, k));
        break;
      case PlanOp::ConeWith:
        s.map = chain_map_from_components(field(js, "map"), operand(s, 0), operand(s, 1));
        result = cone(*s.map).cone;
        break;
      case PlanOp::Summand:
        result = complex_from_json(field(js, "result"));
        s.map = chain_map_from_components(field(js, "map"), result, operand(s, 0));
        s.section = chain_map_from_components(field(js, "section"), operand(s, 0), result);
        break;
    }
    results.push_back(std::move(result));
    plan.steps.push_back(std::move(s));
  }
  return plan;
}

Json to_json(const GhostCertificate& cert, const std::vector<BuildPlan>& build_plans) {
  const KoszulTower& t = cert.tower;
  Json out = header("ghost_certificate");
  out["ring"] = to_json(cert.generator.ring());
  out["generator"] = to_json(cert.generator);
  out["module"] = to_json(t.base);
  out["sequence"] = sequence_json(t.elements);
  out["exponents"] = t.exponents;
  Json stages = Json::array();
  for (const auto& s : t.stages) stages.push_back(to_json(s));
  out["stages"] = std::move(stages);
  Json factors = Json::array();
  for (std::size_t s = 0; s < t.length(); ++s) {
    const auto& checks = cert.ghost_evidence[s];
    bool ghost = std::all_of(checks.begin(), checks.end(), [](const GhostCheck& c) { return c.zero; });
    factors.push_back({{"index", s + 1},
                       {"source_stage", s + 1},
                       {"target_stage", s},
                       {"map", components_to_json(t.factors[s])},
                       {"ghost_checks", checks_json(checks)},
                       {"is_ghost", ghost}});
  }
  out["factors"] = std::move(factors);
  Json eps = Json::array();
  for (const auto& e : t.eps_maps) eps.push_back(components_to_json(e));
  out["eps_maps"] = std::move(eps);
  out["composition"] = {{"map", components_to_json(cert.composition)},
                        {"nullhomotopic", cert.composition_nullhomotopic}};
  out["status"] = cert.valid() ? "verified" : "failure";
  out["failure"] = failure_json(cert.failure);
  out["implied_bound"] = cert.implied_bound();
  out["implied_level_lower_bound"] = cert.valid() ? Json(cert.implied_level_lower_bound()) : Json(nullptr);
  Json plans = Json::array();
  for (const auto& p : build_plans) plans.push_back(to_json(p));
  out["build_plans"] = std::move(plans);
  return out;
}

GhostCertificate certificate_from_json(const Json& j) {
  check_schema(j, "ghost_certificate");
  GhostCertificate cert;
  RingSpec ring = ring_from_json(field(j, "ring"));
  cert.generator = complex_from_json(field(j, "generator"));
  KoszulTower& t = cert.tower;
  t.base = complex_from_json(field(j, "module"));
  for (const auto& s : get<std::vector<std::string>>(j, "sequence"))
    t.elements.push_back(AlgebraElement{parse_poly(s, ring), 0});
  t.exponents = get<std::vector<unsigned>>(j, "exponents");
  for (const auto& s : field(j, "stages")) t.stages.push_back(complex_from_json(s));
  const Json& factors = field(j, "factors");
  if (t.exponents.size() != t.elements.size() || t.stages.size() != t.elements.size() + 1 ||
      factors.size() != t.elements.size() || !field(j, "eps_maps").is_array() ||
      field(j, "eps_maps").size() != t.elements.size())
    invalid_input("certificate lengths are inconsistent");
  for (std::size_t s = 0; s < t.length(); ++s) {
    const Json& f = factors[s];
    t.factors.push_back(chain_map_from_components(field(f, "map"), t.stages[s + 1], t.stages[s]));
    t.eps_maps.push_back(chain_map_from_components(field(j, "eps_maps").at(s), t.stages[s + 1], t.stages[s]));
    std::vector<GhostCheck> checks;
    for (const auto& c : field(f, "ghost_checks")) {
      auto verdict = get<std::string>(c, "verdict");
      if (verdict != "zero" && verdict != "nonzero") invalid_input("ghost verdict must be 'zero' or 'nonzero'");
      checks.push_back({get<int>(c, "degree"), verdict == "zero"});
    }
    cert.ghost_evidence.push_back(std::move(checks));
  }
  const Json& comp = field(j, "composition");
  cert.composition = chain_map_from_components(field(comp, "map"), t.stages.back(), t.stages.front());
  cert.composition_nullhomotopic = get<bool>(comp, "nullhomotopic");
  const Json& failure = field(j, "failure");
  if (!failure.is_null()) {
    auto kind = get<std::string>(failure, "kind");
    if (kind == to_string(FailureKind::NotGhost))
      cert.failure = Failure{FailureKind::NotGhost, get<std::size_t>(failure, "factor")};
    else if (kind == to_string(FailureKind::CompositionZero))
      cert.failure = Failure{FailureKind::CompositionZero, 0};
    else
      invalid_input("unknown failure kind '" + kind + "'");
  }
  return cert;
}

Json to_json(const LevelBound& bound) {
  return {{"level_upper_bound", bound.level}, {"minimized", to_json(bound.minimized)}, {"build_plan", to_json(bound.plan)}};
}

Json to_json(const DepthGentimeReport& rep) {
  Json out = header("depth_gentime_report");
  out["depth"] = rep.depth.infinite ? Json("infinity") : Json(rep.depth.value);
  out["sequence"] = sequence_json(rep.sequence);
  out["certificate"] = rep.certificate ? to_json(*rep.certificate) : Json(nullptr);
  out["tower_top_level_upper_bound"] = rep.tower_top_level_upper ? Json(*rep.tower_top_level_upper) : Json(nullptr);
  out["holds"] = rep.holds;
  return out;
}

Json to_json(const RdimReport& rep) {
  Json out = header("rdim_report");
  out["ring"] = to_json(rep.ring);
  out["dimension"] = rep.dim;
  out["rdim_lower_bound"] = rep.rdim_lower_bound;
  if (rep.certificate) {
    std::vector<BuildPlan> plans;
    if (rep.tower_top_bound) plans.push_back(rep.tower_top_bound->plan);
    out["certificate"] = to_json(*rep.certificate, plans);
  } else {
    out["certificate"] = nullptr;
  }
  Json gens = Json::array();
  for (const auto& c : rep.generator_certificates) gens.push_back(to_json(c));
  out["generator_certificates"] = std::move(gens);
  if (rep.koszul_bound) {
    const std::size_t lower = rep.certificate && rep.certificate->valid() && rep.koszul_is_tower_top
                                  ? rep.certificate->implied_level_lower_bound()
                                  : 0;
    out["koszul"] = {{"target", to_json(rep.koszul_bound->minimized)},
                     {"implied_level_lower_bound", lower},
                     {"level_upper_bound", rep.koszul_bound->level},
                     {"isomorphic_to_tower_top", rep.koszul_is_tower_top},
                     {"tower_top_level_upper_bound", rep.tower_top_bound ? rep.tower_top_bound->level : 0},
                     {"level_exact", lower == rep.koszul_bound->level},
                     {"build_plan", to_json(rep.koszul_bound->plan)}};
    out["implied_level_lower_bound"] = lower;
  } else {
    out["koszul"] = nullptr;
    out["implied_level_lower_bound"] = 1;
  }
  Json battery = Json::array();
  for (const auto& b : rep.battery)
    battery.push_back({{"complex", to_json(b.complex)},
                       {"level_upper_bound", b.bound.level},
                       {"build_plan", to_json(b.bound.plan)}});
  out["battery"] = std::move(battery);
  out["max_battery_level"] = rep.max_battery_level;
  out["verified"] = rep.verified;
  return out;
}

}  // namespace ghostkit
