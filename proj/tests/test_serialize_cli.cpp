#include <gtest/gtest.h>

#include <sstream>

#include "ghostkit/cli.hpp"
#include "ghostkit/sampling.hpp"
#include "ghostkit/serialize.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

struct CliRun {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Serialize, RingRoundTrip) {
  for (RingSpec r : {fp(3), fp(2, MonomialOrder::Lex), qq(1)}) EXPECT_EQ(ring_from_json(to_json(r)), r);
}

TEST(Serialize, ComplexAndMapRoundTrip) {
  RingSpec r = fp(2);
  SeededRng rng(3);
  for (int i = 0; i < 10; ++i) {
    FreeComplex x = random_perfect_complex(r, rng);
    EXPECT_EQ(complex_from_json(to_json(x)), x);
    Minimized m = minimize(x);
    EXPECT_EQ(chain_map_from_json(to_json(m.to_min)), m.to_min);
    EXPECT_EQ(chain_map_from_json(Json::parse(to_json(m.from_min).dump())), m.from_min);
  }
}

TEST(Serialize, PresentationRoundTrip) {
  RingSpec r = fp(2);
  ModulePresentation m = ModulePresentation::cyclic(r, {P(r, "x0^2"), P(r, "x0*x1 - 3*x1^2")});
  ModulePresentation back = presentation_from_json(to_json(m), r);
  EXPECT_EQ(back.ambient_rank, m.ambient_rank);
  EXPECT_EQ(back.relations, m.relations);
}

TEST(Serialize, PlanRoundTripReplays) {
  RingSpec r = fp(2);
  for (const FreeComplex& x : {koszul_object(A(r), seq(r, "x0,x1")), cone(ChainMap::identity(A(r))).cone}) {
    LevelBound b = level_upper_bound(A(r), x);
    Json j = to_json(b.plan);
    BuildPlan back = plan_from_json(j);
    EXPECT_EQ(replay_plan(back), x);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Serialize, CertificateRoundTrip) {
  RingSpec r = fp(2);
  FreeComplex g = direct_sum(koszul_object(A(r), seq(r, "x0")), A(r));
  for (const GhostCertificate& c : {ghost_certificate(A(r), A(r), seq(r, "x0,x1")),
                                    ghost_certificate(A(r), A(r), seq(r, "x0,x0")),
                                    ghost_certificate(g, A(r), seq(r, "x0"), {0u})}) {
    Json j = to_json(c);
    GhostCertificate back = certificate_from_json(j);
    EXPECT_TRUE(replay_certificate(back));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(j["status"], c.valid() ? "verified" : "failure");
  }
}

TEST(Serialize, FailedCertificateHasNullBound) {
  RingSpec r = fp(2);
  Json j = to_json(ghost_certificate(A(r), A(r), seq(r, "x0,x0")));
  EXPECT_TRUE(j["implied_level_lower_bound"].is_null());
  EXPECT_EQ(j["failure"]["kind"], "CompositionZero");
}

TEST(Cli, GhostCertSucceeds) {
  CliRun r = invoke({"ghost-cert", "--seq", "x0,x1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["kind"], "ghost_certificate");
  EXPECT_EQ(j["implied_level_lower_bound"], 3);
  EXPECT_EQ(j["build_plans"][0]["level_upper_bound"], 3);
}

TEST(Cli, GhostCertFailureExitsTwo) {
  CliRun r = invoke({"ghost-cert", "--seq", "x0,x0"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("CompositionZero"), std::string::npos);
}

TEST(Cli, ExponentOverrides) {
  CliRun r = invoke({"ghost-cert", "--seq", "x0,x1", "--exponents", "2,auto"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json()["exponents"], Json::array({2, 0}));
  EXPECT_EQ(invoke({"ghost-cert", "--seq", "x0,x0", "--exponents", "0"}).code, cli::kExitUsage);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"nosuch"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"ghost-cert"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"ghost-cert", "--seq", "x0", "--ring", "Zz[2]"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"ghost-cert", "--seq", "x9"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"ghost-cert", "--seq", "x0", "--bogus"}).code, cli::kExitUsage);
}

TEST(Cli, DepthAndGroebner) {
  CliRun d = invoke({"depth", "--ideal", "x0,x1"});
  ASSERT_EQ(d.code, cli::kExitOk);
  EXPECT_EQ(d.json()["depth"], 2);
  CliRun inf = invoke({"depth", "--ideal", "1"});
  ASSERT_EQ(inf.code, cli::kExitOk);
  EXPECT_EQ(inf.json()["depth"], "infinity");
  CliRun g = invoke({"groebner", "--gens", "x0^2,x0*x1+x1^2"});
  ASSERT_EQ(g.code, cli::kExitOk);
  EXPECT_EQ(g.json()["kind"], "groebner_basis");
}

TEST(Cli, DepthGentimePrecondition) {
  EXPECT_EQ(invoke({"depth-gentime", "--ideal", "x0,x1"}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"depth-gentime", "--ideal", "1"}).code, cli::kExitFailure);
}

TEST(Cli, LevelOfKoszulIsExact) {
  CliRun r = invoke({"level", "--target", "koszul:x0,x1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["implied_level_lower_bound"], 3);
  EXPECT_EQ(j["level_upper_bound"], 3);
  EXPECT_EQ(j["level_exact"], true);
}

TEST(Cli, VerifyTheoremIsDeterministic) {
  CliRun a = invoke({"verify-theorem", "--nvars", "2", "--samples", "4", "--seed", "9"});
  CliRun b = invoke({"verify-theorem", "--nvars", "2", "--samples", "4", "--seed", "9"});
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["verified"], true);
  EXPECT_EQ(a.json()["implied_level_lower_bound"], 3);
}

TEST(Cli, CheckReplaysWrittenCertificate) {
  std::string path = ::testing::TempDir() + "cert.json";
  ASSERT_EQ(invoke({"ghost-cert", "--seq", "x0,x1", "--out", path}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"check", "--in", path}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"check", "--in", path + ".missing"}).code, cli::kExitUsage);
}
