#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/io.hpp"

namespace toricdef {

/// Everything a single invocation needs; filled by the argument parser.
struct RunConfig {
  std::string command;  // dual | t1 | classify | surface | check
  std::vector<std::string> cones;
  std::optional<std::string> degree;  // raw "x,y,z"
  std::optional<std::string> family;  // "q,j,p" = qR* − p s_j
  std::int64_t q_max = 4, p_max = 10;
  std::int64_t window = 6;
  int hodge_i = 0;  // 0: every i in 1..3
  std::string artin = "t^3";
  std::string format = "json";
  std::uint64_t seed = 1;
  int n = 1;
  std::string report = "dims";  // surface: dims | e1 | poisson
  std::string mu_p = "pig";
  std::string suite;  // check: pal-lemma | hodge | poisson-axioms | gauge | crosscheck
  int trials = 0;     // 0: the suite default
  bool crosscheck = false;
};

/// TORICDEF_WINDOW, else 6.
inline std::int64_t default_window() {
  const char* env = std::getenv("TORICDEF_WINDOW");
  if (!env || !*env) return 6;
  return parse_ints(env, 1, "TORICDEF_WINDOW")[0];
}

namespace detail {

inline void validate(const RunConfig& c) {
  if (c.q_max <= 0 || c.p_max <= 0) throw InputError("scan bounds --q-max and --p-max must be positive");
  if (c.window <= 0) throw InputError("window bound must be positive");
  if (c.n <= 0) throw InputError("--n must be positive");
  if (c.trials < 0) throw InputError("--trials must be non-negative");
  if (c.hodge_i < 0 || c.hodge_i > 5) throw InputError("--hodge-i must lie in 1..5");
  if (c.format != "json" && c.format != "tsv") throw InputError("--format must be json or tsv");
  if (c.degree && c.family) throw InputError("give either --degree or --family, not both");
}

inline GorensteinCone single_cone(const RunConfig& c) {
  if (c.cones.size() != 1) throw InputError(c.command + " needs exactly one --cone file");
  return load_cone(c.cones.front());
}

inline std::vector<int> hodge_range(const RunConfig& c) {
  if (c.hodge_i) return {c.hodge_i};
  return {1, 2, 3};
}

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ";") + x;
  return s;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline void require_json(const RunConfig& c, const std::string& what) {
  if (c.format != "json") throw InputError(what + " is only available as json");
}

}  // namespace detail

inline DualReport run_dual(const GorensteinCone& cone) {
  return {cone.rays, cone.dual_rays, cone.canonical_degree, cone.edge_lengths()};
}

/// Single degree: every requested i, zeros included. Scan: nonzero rows only.
inline T1Report run_t1(const RunConfig& c, const GorensteinCone& cone) {
  T1Report r;
  r.canonical_degree = cone.canonical_degree;
  const auto classification = classify(cone);
  std::vector<Vec> degrees;
  const bool single = c.degree || c.family;
  if (c.degree) degrees.push_back(parse_degree(*c.degree));
  else if (c.family) degrees.push_back(parse_family_degree(*c.family, cone));
  else {
    r.q_max = c.q_max;
    r.p_max = c.p_max;
    degrees = scan_degrees(cone, c.q_max, c.p_max);
  }
  r.scanned = static_cast<std::int64_t>(degrees.size());
  for (const auto& d : degrees) {
    const auto labels = detail::join(report_dims(cone, classification, d).labels);
    for (int i : detail::hodge_range(c)) {
      const auto dim = t1_dim(cone, d, i);
      if (single || dim) r.rows.push_back({d, i, dim, labels});
    }
  }
  return r;
}

inline ClassifyReport run_classify(const RunConfig& c, const GorensteinCone& cone) {
  ClassifyReport r;
  r.canonical_degree = cone.canonical_degree;
  r.edge_lengths = cone.edge_lengths();
  r.t1 = classify(cone);
  r.hh = hh_assembly(cone, r.t1);
  if (c.crosscheck) {
    CrosscheckSummary s{c.q_max, c.p_max, static_cast<std::int64_t>(scan_degrees(cone, c.q_max, c.p_max).size()),
                        crosscheck(cone, c.q_max, c.p_max)};
    r.crosscheck = s;
  }
  return r;
}

inline SurfaceReport run_surface(const RunConfig& c) {
  SurfaceReport r;
  r.n = c.n;
  r.report = c.report;
  r.window = c.window;
  if (c.report == "dims") {
    const auto dims = surface_t1_dims(c.n, c.window);
    r.scanned = static_cast<std::int64_t>(dims.size());
    for (const auto& [deg, d] : dims) {
      // Nonzero degrees are kS2 = (k, k, 0).
      const std::string label = std::to_string(deg[0]) + "S2";
      if (d.first) r.dims.push_back({deg, 1, d.first, label});
      if (d.second) r.dims.push_back({deg, 2, d.second, label});
    }
  } else if (c.report == "e1") {
    r.e1 = e1_page(c.n);
  } else if (c.report == "poisson") {
    r.poisson = poisson_cohomology(c.n, parse_mu_p(c.mu_p), c.window);
  } else {
    throw InputError("--report must be dims, e1 or poisson");
  }
  return r;
}

inline SuiteResult crosscheck_suite(const std::string& path, std::int64_t q_max, std::int64_t p_max) {
  const auto cone = load_cone(path);
  const auto scanned = static_cast<std::int64_t>(scan_degrees(cone, q_max, p_max).size());
  SuiteResult res{path, scanned * 5, 0, {}};
  for (const auto& m : crosscheck(cone, q_max, p_max)) {
    ++res.failures;
    res.lines.push_back("degree " + to_string(m.degree) + " i=" + std::to_string(m.i) + ": classified " +
                        std::to_string(m.classified) + ", evaluated " + std::to_string(m.evaluated) +
                        (m.label.empty() ? "" : " (" + m.label + ")"));
  }
  res.lines.push_back("degrees scanned: " + std::to_string(scanned) + ", i = 1..5");
  return res;
}

inline CheckReport run_check(const RunConfig& c) {
  CheckReport r{c.suite, c.seed, {}, {}};
  auto trials = [&](int fallback) { return c.trials ? c.trials : fallback; };
  if (c.suite == "pal-lemma") {
    const auto p = pal_lemma_suite(c.seed, trials(100));
    SuiteResult s{"pal-lemma", trials(100), 0, {}};
    for (const auto& cl : p.clauses) {
      s.failures += cl.level == "fails";
      s.lines.push_back(cl.name + ": holds at " + cl.level + " level");
    }
    s.failures += !p.pi_g_jacobi + !p.violation_detected;
    s.lines.push_back(std::string("pi_g e3(3)[pi_g,pi_g] = 0: ") + (p.pi_g_jacobi ? "yes" : "no"));
    s.lines.push_back(std::string("seeded Jacobi violation detected: ") + (p.violation_detected ? "yes" : "no"));
    s.lines.push_back("random skew cochains satisfying Jacobi: " + std::to_string(p.jacobi_trials_satisfying));
    r.results.push_back(s);
    r.clauses = p.clauses;
  } else if (c.suite == "hodge") {
    r.results.push_back(hodge_suite(c.seed, trials(200)));
  } else if (c.suite == "poisson-axioms") {
    r.results.push_back(poisson_axioms_suite(c.seed, trials(200)));
  } else if (c.suite == "gauge") {
    r.results.push_back(gauge_suite(c.seed, trials(50), ArtinCoefficients::parse(c.artin)));
  } else if (c.suite == "crosscheck") {
    if (c.cones.empty()) throw InputError("check --suite crosscheck needs at least one --cone file");
    for (const auto& path : c.cones) r.results.push_back(crosscheck_suite(path, c.q_max, c.p_max));
  } else {
    throw InputError("--suite must be pal-lemma, hodge, poisson-axioms, gauge or crosscheck");
  }
  return r;
}

/// Exit codes: 0 success, 1 input error, 2 invariant violation or failed check.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    detail::validate(c);
    if (c.command == "dual") {
      detail::require_json(c, "dual");
      detail::emit(out, envelope("dual", run_dual(detail::single_cone(c))));
      return 0;
    }
    if (c.command == "t1") {
      const auto r = run_t1(c, detail::single_cone(c));
      if (c.format == "tsv") out << tsv(r.rows);
      else detail::emit(out, envelope("t1", r));
      return 0;
    }
    if (c.command == "classify") {
      const auto cone = detail::single_cone(c);
      const auto r = run_classify(c, cone);
      if (c.format == "tsv") out << tsv(classify_rows(cone, r.t1));
      else detail::emit(out, envelope("classify", r));
      if (r.crosscheck && !r.crosscheck->mismatches.empty()) {
        err << "invariant violation: classifier and evaluator disagree at "
            << r.crosscheck->mismatches.size() << " (degree, i) pairs\n";
        return 2;
      }
      return 0;
    }
    if (c.command == "surface") {
      const auto r = run_surface(c);
      if (c.format == "tsv") {
        if (c.report != "dims") throw InputError("tsv output is only available for --report dims");
        out << tsv(r.dims);
      } else {
        detail::emit(out, envelope("surface", r));
      }
      return 0;
    }
    if (c.command == "check") {
      detail::require_json(c, "check");
      const auto r = run_check(c);
      detail::emit(out, envelope("check", r));
      if (!r.ok()) {
        err << "invariant violation: suite " << c.suite << " has failures\n";
        return 2;
      }
      return 0;
    }
    throw InputError("unknown command '" + c.command + "'");
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedStructure& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace toricdef
