#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "toricdef/cli.hpp"

using namespace toricdef;

namespace {

const std::string kFixtures = TORICDEF_FIXTURES;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& command, const std::string& cone = "") {
  RunConfig c;
  c.command = command;
  if (!cone.empty()) c.cones = {kFixtures + "/" + cone + ".json"};
  return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

template <class R>
void expect_round_trip(const Outcome& o, const std::string& command, const R& direct) {
  ASSERT_EQ(o.code, 0) << o.err;
  const auto parsed = parse_envelope<R>(Json::parse(o.out), command);
  EXPECT_EQ(parsed, direct);
  EXPECT_EQ(envelope(command, parsed).dump(2) + "\n", o.out);
}

}  // namespace

TEST(Cli, DualRoundTrip) {
  const auto c = config("dual", "p123");
  const auto o = invoke(c);
  const auto r = run_dual(load_cone(c.cones[0]));
  expect_round_trip(o, "dual", r);
  EXPECT_EQ(r.canonical_degree, (Vec{0, 0, 1}));
  EXPECT_EQ(r.edge_lengths, (std::vector<std::int64_t>{3, 1, 2}));
}

TEST(Cli, ClassifyRoundTripAndDeterminism) {
  auto c = config("classify", "p123");
  const auto a = invoke(c), b = invoke(c);
  EXPECT_EQ(a.out, b.out);
  expect_round_trip(a, "classify", run_classify(c, load_cone(c.cones[0])));
  c.crosscheck = true;
  c.q_max = 3;
  c.p_max = 6;
  const auto x = invoke(c);
  const auto r = parse_envelope<ClassifyReport>(Json::parse(x.out), "classify");
  ASSERT_TRUE(r.crosscheck);
  // The two known disagreements at 3R* − s_1 make this exit 2.
  EXPECT_EQ(x.code, r.crosscheck->mismatches.empty() ? 0 : 2);
}

TEST(Cli, SurfaceReportsRoundTrip) {
  for (const std::string rep : {"dims", "e1", "poisson"}) {
    auto c = config("surface");
    c.n = 2;
    c.report = rep;
    const auto o = invoke(c);
    expect_round_trip(o, "surface", run_surface(c));
    EXPECT_EQ(o.out, invoke(c).out);
  }
}

TEST(Cli, SurfaceDimsTable) {
  auto c = config("surface");
  c.n = 3;
  c.format = "tsv";
  const auto o = invoke(c);
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "degree_x\tdegree_y\tdegree_z\thodge_i\tdim\tcase_label\n"
            "2\t2\t0\t1\t1\t2S2\n2\t2\t0\t2\t1\t2S2\n"
            "3\t3\t0\t1\t1\t3S2\n3\t3\t0\t2\t1\t3S2\n"
            "4\t4\t0\t1\t1\t4S2\n4\t4\t0\t2\t1\t4S2\n");
}

TEST(Cli, T1SymbolicDegreeMatchesRaw) {
  auto c = config("t1", "p123");
  c.family = "3,1,1";
  const auto sym = invoke(c);
  c.family.reset();
  c.degree = "0,-1,2";
  const auto raw = invoke(c);
  ASSERT_EQ(sym.code, 0);
  EXPECT_EQ(sym.out, raw.out);
  expect_round_trip(raw, "t1", run_t1(c, load_cone(c.cones[0])));
}

TEST(Cli, HexagonScanHasOnlyTheCanonicalDegree) {
  auto c = config("t1", "hexagon");
  const auto r = parse_envelope<T1Report>(Json::parse(invoke(c).out), "t1");
  ASSERT_EQ(r.rows.size(), 2u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.degree, (Vec{0, 0, 1}));
    EXPECT_EQ(row.dim, 3);
  }
}

TEST(Cli, CheckSuitesAreDeterministic) {
  auto c = config("check");
  c.suite = "hodge";
  c.seed = 7;
  c.trials = 20;
  const auto a = invoke(c), b = invoke(c);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto r = parse_envelope<CheckReport>(Json::parse(a.out), "check");
  EXPECT_EQ(r, run_check(c));
  c.suite = "crosscheck";
  c.cones = {kFixtures + "/hexagon.json", kFixtures + "/square2.json"};
  c.q_max = 3;
  c.p_max = 5;
  EXPECT_EQ(invoke(c).code, 0);
}

TEST(Cli, InputErrorsCarryLocations) {
  auto c = config("classify");
  c.cones = {write_temp("noint.json", "{\"rays\": [[1,0,1],\n[0,1,1.5],[0,0,1]]}")};
  auto o = invoke(c);
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("/rays/1/2"), std::string::npos) << o.err;

  c.cones = {write_temp("broken.json", "{\"rays\": [[1,0,1],\n[0,1,1]\n")};
  o = invoke(c);
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("broken.json:"), std::string::npos) << o.err;

  c.cones = {write_temp("notgor.json", "{\"rays\": [[1,0,0],[0,1,0],[1,1,2]]}")};
  EXPECT_EQ(invoke(c).code, 1);

  auto t = config("t1", "p123");
  t.degree = "1,2";
  o = invoke(t);
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("--degree"), std::string::npos);
  t.degree.reset();
  t.family = "2,7,1";
  EXPECT_EQ(invoke(t).code, 1);

  auto s = config("surface");
  s.report = "poisson";
  s.mu_p = write_temp("mp.json", "{\"kappa\": \"1/2\", \"m\": 3}");
  EXPECT_EQ(invoke(s).code, 1);
  s.report = "e1";
  s.format = "tsv";
  EXPECT_EQ(invoke(s).code, 1);

  auto k = config("check");
  k.suite = "nope";
  EXPECT_EQ(invoke(k).code, 1);
  k.suite = "gauge";
  k.artin = "t1,t2^3";
  EXPECT_EQ(invoke(k).code, 1);
  k.q_max = 0;
  EXPECT_EQ(invoke(k).code, 1);
}

TEST(Cli, MuPFileIsExact) {
  auto s = config("surface");
  s.report = "poisson";
  s.n = 1;
  s.mu_p = write_temp("half.json", "{\"kappa\": \"2/4\", \"m\": 1}");
  const auto o = invoke(s);
  ASSERT_EQ(o.code, 0) << o.err;
  const auto r = parse_envelope<SurfaceReport>(Json::parse(o.out), "surface");
  ASSERT_TRUE(r.poisson);
  EXPECT_EQ(r.poisson->mu_p.kappa, frac(1, 2));
  EXPECT_EQ(r.poisson->h1, 1);
}

TEST(Cli, ArtinSpecParsing) {
  EXPECT_EQ(ArtinCoefficients::parse("t^3").nu, 3);
  EXPECT_EQ(ArtinCoefficients::parse("t1..t3^2").variables, 3);
  EXPECT_THROW(ArtinCoefficients::parse("t"), InputError);
}
