// One PASS/FAIL line per acceptance criterion. Exact arithmetic everywhere;
// the only tolerances are the wall-clock limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "toricdef/cli.hpp"

using namespace toricdef;

namespace {

const std::string kFixtures = TORICDEF_FIXTURES;
const std::uint64_t kSeed = 20240501;

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) v.fail("runtime " + std::to_string(s) + " s over " + std::to_string(limit_s) + " s");
  failures += !v.ok;
  std::printf("criterion %2d: %s (%.2f s) %s\n", id, v.ok ? "PASS" : "FAIL", s, v.detail.c_str());
}

RunConfig cfg(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

int main() {
  // 1. Surface T¹ table. Oracle: the Jacobian basis 1, z, …, z^{n−1} of
  //    xy − z^{n+1} gives first-order deformations t·z^m of weight −(n+1−m)S2.
  criterion(1, 10, [](Verdict& v) {
    for (int n = 1; n <= 6; ++n) {
      auto c = cfg("surface");
      c.n = n;
      c.window = 40;
      const auto r = run_surface(c);
      std::set<std::tuple<Vec, int, std::int64_t>> want, got;
      for (int m = 0; m < n; ++m) {
        const std::int64_t k = n + 1 - m;
        for (int i = 1; i <= 2; ++i) want.insert({Vec{k, k, 0}, i, 1});
      }
      for (const auto& row : r.dims) got.insert({row.degree, row.hodge_i, row.dim});
      // Lattice degrees with |pairings| ≤ 40: p2 ≡ p1 mod (n+1).
      std::int64_t lattice = 0;
      for (int p1 = -40; p1 <= 40; ++p1)
        for (int p2 = -40; p2 <= 40; ++p2) lattice += (p2 - p1) % (n + 1) == 0;
      if (got != want) v.fail("n=" + std::to_string(n) + ": nonzero table differs from the Jacobian oracle");
      if (r.scanned != lattice) v.fail("n=" + std::to_string(n) + ": window is missing degrees");
    }
    v.note("n=1..6, all degrees with |<a_i,R>| <= 40");
  });

  // 2. Jacobian ring dimension.
  criterion(2, 0, [](Verdict& v) {
    for (int n = 1; n <= 10; ++n) {
      const auto j = jacobian_ring_dim(n);
      if (j.dim != n || static_cast<int>(j.basis.size()) != n) v.fail("n=" + std::to_string(n));
    }
  });

  // 3. P(1,2,3) classification and crosscheck.
  criterion(3, 30, [](Verdict& v) {
    auto c = cfg("classify");
    c.cones = {kFixtures + "/p123.json"};
    c.crosscheck = true;
    c.q_max = 5;
    c.p_max = 20;
    const auto cone = load_cone(c.cones[0]);
    const auto r = run_classify(c, cone);
    const std::vector<std::tuple<int, std::int64_t, std::int64_t>> want{{0, 2, 1}, {0, 3, 2}, {2, 2, 1}};
    std::vector<std::tuple<int, std::int64_t, std::int64_t>> got;
    for (const auto& f : r.t1.families) {
      got.push_back({f.j, f.q, f.p_min});
      if (f.kind != "c" || f.dims != HodgeDims{1, 2, 1}) v.fail("family dims are not (1,2,1)");
    }
    if (got != want) v.fail("families differ from (j,q,p_min) = (1,2,1), (1,3,2), (3,2,1)");
    const Vec minus2 = 2 * cone.canonical_degree;
    const auto look = report_dims(cone, r.t1, minus2);
    if (look.dims != HodgeDims{0, 1, 1}) v.fail("-2R* does not report (0,1,1)");
    bool noted = false;
    for (const auto& n : r.t1.notes) noted = noted || n.find(to_string(minus2)) != std::string::npos;
    if (!noted) v.fail("report lacks the note on the worked example");
    const auto& mm = r.crosscheck->mismatches;
    if (!mm.empty()) {
      std::ostringstream s;
      s << mm.size() << " crosscheck mismatches over " << r.crosscheck->scanned << " degrees:";
      for (const auto& m : mm)
        s << " R=" << to_string(m.degree) << " i=" << m.i << " classified " << m.classified << " evaluated "
          << m.evaluated;
      v.fail(s.str());
    }
  });

  // 4. Hexagon scan.
  criterion(4, 30, [](Verdict& v) {
    auto c = cfg("t1");
    c.cones = {kFixtures + "/hexagon.json"};
    c.q_max = 4;
    c.p_max = 10;
    const auto cone = load_cone(c.cones[0]);
    const auto r = run_t1(c, cone);
    const std::vector<DegreeRow> want{{cone.canonical_degree, 1, 3, "a"}, {cone.canonical_degree, 2, 3, "a"}};
    if (r.rows != want) v.fail("nonzero rows are not exactly R* with dims (3,3,0)");
    v.note(std::to_string(r.scanned) + " degrees scanned");
  });

  // 5. T¹_(4) = T¹_(5) = 0 on every fixture cone.
  criterion(5, 0, [](Verdict& v) {
    std::int64_t total = 0;
    for (const char* name : {"p123", "hexagon", "square1", "square2", "trapezoid", "rectangle", "pentagon"}) {
      const auto cone = load_cone(kFixtures + "/" + name + ".json");
      for (const auto& r : scan_degrees(cone, 4, 10)) {
        ++total;
        for (int i = 4; i <= 5; ++i)
          if (t1_dim(cone, r, i) != 0) v.fail(std::string(name) + " R=" + to_string(r) + " i=" + std::to_string(i));
      }
    }
    v.note(std::to_string(total) + " degrees on 7 cones");
  });

  // 6. Hodge idempotents on sparse table cochains.
  criterion(6, 60, [](Verdict& v) {
    const auto r = hodge_suite(kSeed, 200);
    if (!r.ok()) v.fail(r.lines.front());
  });

  // 7. Bracket projection lemma.
  criterion(7, 0, [](Verdict& v) {
    const auto r = pal_lemma_suite(kSeed, 100);
    if (r.clauses.front().level == "fails") v.fail("e3(2)[p,p] != 0");
    if (!r.pi_g_jacobi) v.fail("pi_g fails e3(3)[pi_g,pi_g] = 0");
    if (!r.violation_detected) v.fail("Jacobi violation not detected");
    for (const auto& c : r.clauses) v.note(c.name + " @" + c.level);
  });

  // 8. Maurer–Cartan versus Poisson axioms.
  criterion(8, 0, [](Verdict& v) {
    const auto r = poisson_axioms_suite(kSeed, 200);
    if (!r.ok()) v.fail(r.lines.front());
    v.note(r.lines.back());
  });

  // 9. Gauge action over k[t]/t³.
  criterion(9, 0, [](Verdict& v) {
    const auto r = gauge_suite(kSeed, 50, ArtinCoefficients::parse("t^3"));
    if (!r.ok()) v.fail(r.lines.front());
  });

  // 10. Poisson cohomology of A_n with μ_p = π_g.
  criterion(10, 120, [](Verdict& v) {
    for (int n = 1; n <= 3; ++n) {
      const auto a = poisson_cohomology(n, pi_g_spec(), 6), b = poisson_cohomology(n, pi_g_spec(), 12);
      const std::string tag = "n=" + std::to_string(n);
      if (a.h1 != n || a.h2 != n) v.fail(tag + ": H1=" + std::to_string(a.h1) + " H2=" + std::to_string(a.h2));
      if (a.coker_total != 0) v.fail(tag + ": d1 not surjective");
      if (a.h1 != b.h1 || a.h2 != b.h2 || a.coker != b.coker) v.fail(tag + ": differs between d=6 and d=12");
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
