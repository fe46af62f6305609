#include "ghostkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ghostkit/error.hpp"
#include "ghostkit/serialize.hpp"

namespace ghostkit::cli {

namespace {

struct Common {
  std::string ring = "Fp[2],p=32003";
  std::string order = "grevlex";
  std::string out_path;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RingSpec ring_of(const Common& c) { return RingSpec::parse(c.ring, parse_order(c.order)); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

FreeComplex complex_file(const std::string& path, const RingSpec& ring) {
  FreeComplex x = complex_from_json(read_json_file(path));
  if (!(x.ring() == ring)) throw UsageError("'" + path + "' is over " + x.ring().describe() + ", not " + ring.describe());
  return x;
}

std::vector<AlgebraElement> sequence_of(const std::string& text, const RingSpec& ring) {
  return as_elements(parse_poly_list(text, ring));
}

std::vector<std::optional<unsigned>> overrides_of(const std::string& text, std::size_t length) {
  if (text.empty()) return {};
  std::vector<std::optional<unsigned>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "auto") {
      out.emplace_back();
      continue;
    }
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > kTorsionChainCap) throw std::invalid_argument(item);
      out.emplace_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("--exponents: '" + item + "' is neither a small natural number nor 'auto'");
    }
  }
  if (out.size() != length) throw UsageError("--exponents needs one entry per element of --seq");
  return out;
}

void emit(const Json& j, const Common& c, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw UsageError("cannot write '" + c.out_path + "'");
  file << text;
}

void add_common(CLI::App* sub, Common& c, bool with_ring = true) {
  if (with_ring) sub->add_option("--ring", c.ring, "Fp[n],p=<prime> or Q[n]")->capture_default_str();
  sub->add_option("--order", c.order, "grevlex|lex")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "write JSON here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ghost-map certificates for perfect complexes over polynomial rings", "ghostkit"};
  app.require_subcommand(1);
  Common common;

  auto* cert_cmd = app.add_subcommand("ghost-cert", "ghost-lemma certificate for a Koszul tower");
  std::string seq, exponents, generator_path, module_path;
  add_common(cert_cmd, common);
  cert_cmd->add_option("--seq", seq, "comma-separated sequence, e.g. x0,x1")->required();
  cert_cmd->add_option("--exponents", exponents, "per-element overrides, e.g. 0,auto");
  cert_cmd->add_option("--generator", generator_path, "complex JSON for G (default: A)");
  cert_cmd->add_option("--module", module_path, "complex JSON for M (default: A)");

  auto* depth_cmd = app.add_subcommand("depth", "depth of an ideal on a module via Koszul homology");
  std::string ideal, presentation_path;
  add_common(depth_cmd, common);
  depth_cmd->add_option("--ideal", ideal, "comma-separated generators")->required();
  depth_cmd->add_option("--module", presentation_path, "presentation JSON {ambient_rank, relations} (default: A)");

  auto* gentime_cmd = app.add_subcommand("depth-gentime", "depth of a on Hom*(M,M) against a ghost certificate");
  std::string gt_ideal, gt_complex, gt_generator;
  add_common(gentime_cmd, common);
  gentime_cmd->add_option("--ideal", gt_ideal, "comma-separated generators")->required();
  gentime_cmd->add_option("--complex", gt_complex, "complex JSON for M (default: A)");
  gentime_cmd->add_option("--generator", gt_generator, "complex JSON for G (default: A)");
  gentime_cmd->add_option("--seed", common.seed)->capture_default_str();

  auto* level_cmd = app.add_subcommand("level", "constructive level bound with respect to A");
  std::string target;
  add_common(level_cmd, common);
  level_cmd->add_option("--target", target, "koszul:<seq> or a complex JSON file")->required();

  auto* theorem_cmd = app.add_subcommand("verify-theorem", "Rdim lower and upper evidence for F_p[x0..x{n-1}]");
  std::optional<std::size_t> nvars;
  std::uint32_t prime = kDefaultPrime;
  std::size_t samples = 20;
  std::vector<std::string> generator_paths;
  add_common(theorem_cmd, common);
  theorem_cmd->add_option("--nvars", nvars, "number of variables (overrides --ring)");
  theorem_cmd->add_option("--prime", prime, "characteristic used with --nvars")->capture_default_str();
  theorem_cmd->add_option("--samples", samples, "size of the random battery")->capture_default_str();
  theorem_cmd->add_option("--seed", common.seed)->capture_default_str();
  theorem_cmd->add_option("--generator", generator_paths, "extra candidate generators (complex JSON)");

  auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis of an ideal");
  std::string gens;
  add_common(gb_cmd, common);
  gb_cmd->add_option("--gens", gens, "comma-separated generators")->required();

  auto* check_cmd = app.add_subcommand("check", "replay a ghost certificate JSON");
  std::string in_path;
  add_common(check_cmd, common, false);
  check_cmd->add_option("--in", in_path, "certificate JSON")->required();

  std::vector<std::string> argv_store{"ghostkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cert_cmd->parsed()) {
      RingSpec ring = ring_of(common);
      auto xs = sequence_of(seq, ring);
      if (xs.empty()) throw UsageError("--seq must not be empty");
      FreeComplex a = FreeComplex::unit(ring);
      FreeComplex g = generator_path.empty() ? a : complex_file(generator_path, ring);
      FreeComplex m = module_path.empty() ? a : complex_file(module_path, ring);
      GhostCertificate cert = ghost_certificate(g, m, xs, overrides_of(exponents, xs.size()));
      std::vector<BuildPlan> plans;
      if (g == a) plans.push_back(level_upper_bound(g, cert.tower.top()).plan);
      emit(to_json(cert, plans), common, out);
      if (!cert.valid()) err << "Failure(" << cert.failure->describe() << ")\n";
      return cert.valid() ? kExitOk : kExitFailure;
    }
    if (depth_cmd->parsed()) {
      RingSpec ring = ring_of(common);
      IdealGens a{sequence_of(ideal, ring)};
      ModulePresentation m = presentation_path.empty()
                                 ? ModulePresentation::free(ring, 1)
                                 : presentation_from_json(read_json_file(presentation_path), ring);
      Depth d = depth(a, m);
      Json homology = Json::array();
      if (!d.infinite) {
        auto hs = koszul_homology(a, m);
        for (std::size_t i = 0; i < hs.size(); ++i) homology.push_back({{"index", i}, {"zero", is_zero_module(hs[i])}});
      }
      Json j{{"schema_version", kSchemaVersion},
             {"kind", "depth"},
             {"ring", to_json(ring)},
             {"depth", d.infinite ? Json("infinity") : Json(d.value)},
             {"koszul_homology", homology}};
      Json ideal_json = Json::array();
      for (const auto& x : a.gens) ideal_json.push_back(x.value.to_string());
      j["ideal"] = ideal_json;
      emit(j, common, out);
      return kExitOk;
    }
    if (gentime_cmd->parsed()) {
      RingSpec ring = ring_of(common);
      FreeComplex a = FreeComplex::unit(ring);
      FreeComplex m = gt_complex.empty() ? a : complex_file(gt_complex, ring);
      FreeComplex g = gt_generator.empty() ? a : complex_file(gt_generator, ring);
      DepthGentimeReport rep = verify_depth_leq_gentime(g, m, IdealGens{sequence_of(gt_ideal, ring)}, common.seed);
      emit(to_json(rep), common, out);
      return rep.holds ? kExitOk : kExitFailure;
    }
    if (level_cmd->parsed()) {
      RingSpec ring = ring_of(common);
      FreeComplex a = FreeComplex::unit(ring);
      const std::string prefix = "koszul:";
      Json j{{"schema_version", kSchemaVersion}, {"kind", "level"}, {"ring", to_json(ring)}};
      FreeComplex x;
      std::optional<GhostCertificate> cert;
      if (target.rfind(prefix, 0) == 0) {
        auto xs = sequence_of(target.substr(prefix.size()), ring);
        if (xs.empty()) throw UsageError("--target koszul: needs a nonempty sequence");
        x = koszul_object(a, xs);
        std::vector<std::optional<unsigned>> zeros(xs.size(), 0u);
        cert = ghost_certificate(a, a, xs, zeros);
      } else {
        x = complex_file(target, ring);
      }
      LevelBound bound = level_upper_bound(a, x);
      j["target"] = to_json(x);
      j["level_upper_bound"] = bound.level;
      j["minimized"] = to_json(bound.minimized);
      j["build_plan"] = to_json(bound.plan);
      // The tower top of a zero-exponent certificate is Σ^{-t} of the target
      // up to signs; level is invariant under both.
      std::optional<std::size_t> lower;
      if (cert && cert->valid() &&
          sign_isomorphism(cert->tower.top(), shift(x, -static_cast<int>(cert->implied_bound()))))
        lower = cert->implied_level_lower_bound();
      j["implied_level_lower_bound"] = lower ? Json(*lower) : Json(nullptr);
      j["level_exact"] = lower && *lower == bound.level;
      j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
      emit(j, common, out);
      return kExitOk;
    }
    if (theorem_cmd->parsed()) {
      RingSpec ring = nvars ? RingSpec::parse("Fp[" + std::to_string(*nvars) + "],p=" + std::to_string(prime),
                                              parse_order(common.order))
                            : ring_of(common);
      if (ring.characteristic == 0) throw UsageError("verify-theorem needs a prime field");
      RdimOptions opts;
      opts.samples = samples;
      opts.seed = common.seed;
      for (const auto& p : generator_paths) opts.generators.push_back(complex_file(p, ring));
      RdimReport rep = rdim_report(ring, opts);
      emit(to_json(rep), common, out);
      return rep.verified ? kExitOk : kExitFailure;
    }
    if (gb_cmd->parsed()) {
      RingSpec ring = ring_of(common);
      auto polys = parse_poly_list(gens, ring);
      if (polys.empty()) throw UsageError("--gens must not be empty");
      ModuleGB gb = groebner_basis(polys);
      Json basis = Json::array();
      for (const auto& p : gb.polys()) basis.push_back(p.to_string());
      Json input = Json::array();
      for (const auto& p : polys) input.push_back(p.to_string());
      emit({{"schema_version", kSchemaVersion},
            {"kind", "groebner_basis"},
            {"ring", to_json(ring)},
            {"generators", input},
            {"basis", basis}},
           common, out);
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      GhostCertificate cert = certificate_from_json(read_json_file(in_path));
      std::string why;
      bool same = replay_certificate(cert, &why);
      emit({{"schema_version", kSchemaVersion},
            {"kind", "replay"},
            {"reproduced", same},
            {"mismatch", same ? Json(nullptr) : Json(why)},
            {"certificate_valid", cert.valid()}},
           common, out);
      if (!same) err << "Failure(ReplayMismatch): " << why << "\n";
      return same && cert.valid() ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::InvalidInput) return kExitUsage;
    err << "Failure(" << to_string(e.kind()) << ")\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ghostkit::cli
