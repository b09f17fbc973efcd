#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricdef/classifier.hpp"
#include "toricdef/suites.hpp"
#include "toricdef/surface.hpp"

// Rationals travel as strings ("3/2") so they stay exact.
namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = q.get_str(); }
  static void from_json(const json& j, mpq_class& q) {
    if (j.is_number_integer()) {
      q = mpq_class(j.get<long>());
    } else {
      q = mpq_class(j.get<std::string>());
      q.canonicalize();
    }
  }
};
}  // namespace nlohmann

namespace toricdef {

using Json = nlohmann::json;
inline constexpr int kSchema = 1;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DegreeFamily, kind, j, q, p_min, dims)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SporadicEntry, degree, dims, labels)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DimensionReport, sporadic, families, notes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Mismatch, degree, i, classified, evaluated, label)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HHReport::Row, what, dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HHReport, hh2_t1, hh3_t1, hh2_placeholders, hh3_placeholders)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PageEntry, j, k, m, status, dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpectralPage, n, j_max, k_max, entries)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BiderivationSpec, kappa, m, name)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PoissonCohomology, n, mu_p, window, h0, coker, coker_total, h2_1, h3_2, h1,
                                   h2, spot_checks, higher)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SuiteResult, name, trials, failures, lines)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LemmaClause, name, level, trials, cochain_failures, cocycle_failures)

/// One line of a degree table; the fixed TSV columns.
struct DegreeRow {
  Vec degree{};
  int hodge_i = 1;
  std::int64_t dim = 0;
  std::string case_label;
  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DegreeRow, degree, hodge_i, dim, case_label)

inline const char* kTsvHeader = "degree_x\tdegree_y\tdegree_z\thodge_i\tdim\tcase_label";

inline std::string tsv(const std::vector<DegreeRow>& rows) {
  std::ostringstream out;
  out << kTsvHeader << '\n';
  for (const auto& r : rows)
    out << r.degree[0] << '\t' << r.degree[1] << '\t' << r.degree[2] << '\t' << r.hodge_i << '\t' << r.dim << '\t'
        << (r.case_label.empty() ? "-" : r.case_label) << '\n';
  return out.str();
}

struct DualReport {
  std::vector<Vec> rays, dual_rays;
  Vec canonical_degree{};
  std::vector<std::int64_t> edge_lengths;
  friend bool operator==(const DualReport&, const DualReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DualReport, rays, dual_rays, canonical_degree, edge_lengths)

struct T1Report {
  Vec canonical_degree{};
  std::int64_t q_max = 0, p_max = 0;  // zero for single-degree queries
  std::int64_t scanned = 0;
  std::vector<DegreeRow> rows;
  friend bool operator==(const T1Report&, const T1Report&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(T1Report, canonical_degree, q_max, p_max, scanned, rows)

struct CrosscheckSummary {
  std::int64_t q_max = 0, p_max = 0, scanned = 0;
  std::vector<Mismatch> mismatches;
  friend bool operator==(const CrosscheckSummary&, const CrosscheckSummary&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CrosscheckSummary, q_max, p_max, scanned, mismatches)

struct ClassifyReport {
  Vec canonical_degree{};
  std::vector<std::int64_t> edge_lengths;
  DimensionReport t1;
  HHReport hh;
  std::optional<CrosscheckSummary> crosscheck;
  friend bool operator==(const ClassifyReport&, const ClassifyReport&) = default;
};

inline void to_json(Json& j, const ClassifyReport& r) {
  j = Json{{"canonical_degree", r.canonical_degree}, {"edge_lengths", r.edge_lengths}, {"t1", r.t1}, {"hh", r.hh}};
  if (r.crosscheck) j["crosscheck"] = *r.crosscheck;
}
inline void from_json(const Json& j, ClassifyReport& r) {
  j.at("canonical_degree").get_to(r.canonical_degree);
  j.at("edge_lengths").get_to(r.edge_lengths);
  j.at("t1").get_to(r.t1);
  j.at("hh").get_to(r.hh);
  r.crosscheck.reset();
  if (j.contains("crosscheck")) r.crosscheck = j.at("crosscheck").get<CrosscheckSummary>();
}

/// Table rows for the classification: sporadic degrees, then each family at
/// its first member p = p_min.
inline std::vector<DegreeRow> classify_rows(const GorensteinCone& cone, const DimensionReport& r) {
  std::vector<DegreeRow> rows;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + x;
    return s;
  };
  for (const auto& e : r.sporadic)
    for (int i = 0; i < 3; ++i)
      if (e.dims[i]) rows.push_back({e.degree, i + 1, e.dims[i], join(e.labels)});
  for (const auto& f : r.families)
    for (int i = 0; i < 3; ++i)
      if (f.dims[i])
        rows.push_back({f.degree(cone, f.p_min), i + 1, f.dims[i],
                        "c(j=" + std::to_string(f.j + 1) + ",q=" + std::to_string(f.q) +
                            ",p>=" + std::to_string(f.p_min) + ")"});
  return rows;
}

struct SurfaceReport {
  int n = 1;
  std::string report;  // dims | e1 | poisson
  std::int64_t window = 0;
  std::int64_t scanned = 0;  // degrees inspected for dims
  std::vector<DegreeRow> dims;
  std::optional<SpectralPage> e1;
  std::optional<PoissonCohomology> poisson;
  friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

inline void to_json(Json& j, const SurfaceReport& r) {
  j = Json{{"n", r.n}, {"report", r.report}, {"window", r.window}};
  if (r.report == "dims") {
    j["scanned"] = r.scanned;
    j["dims"] = r.dims;
  }
  if (r.e1) j["e1"] = *r.e1;
  if (r.poisson) j["poisson"] = *r.poisson;
}
inline void from_json(const Json& j, SurfaceReport& r) {
  j.at("n").get_to(r.n);
  j.at("report").get_to(r.report);
  j.at("window").get_to(r.window);
  r.scanned = j.value("scanned", std::int64_t{0});
  r.dims = j.value("dims", std::vector<DegreeRow>{});
  r.e1.reset();
  r.poisson.reset();
  if (j.contains("e1")) r.e1 = j.at("e1").get<SpectralPage>();
  if (j.contains("poisson")) r.poisson = j.at("poisson").get<PoissonCohomology>();
}

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> results;
  std::vector<LemmaClause> clauses;  // pal-lemma only
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
  bool ok() const {
    for (const auto& r : results)
      if (!r.ok()) return false;
    return true;
  }
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckReport, suite, seed, results, clauses)

/// {"schema": 1, "command": ..., "report": ...}
template <class R>
Json envelope(const std::string& command, const R& report) {
  return Json{{"schema", kSchema}, {"command", command}, {"report", report}};
}

template <class R>
R parse_envelope(const Json& j, const std::string& command) {
  if (j.value("schema", 0) != kSchema) throw InputError("report schema is not " + std::to_string(kSchema));
  if (j.value("command", std::string()) != command) throw InputError("report is not a '" + command + "' report");
  return j.at("report").get<R>();
}

// ---- input files --------------------------------------------------------------

namespace detail {

/// "file:line:col" for a byte offset into text.
inline std::string text_location(const std::string& file, const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return file + ":" + std::to_string(line) + ":" + std::to_string(col);
}

inline std::int64_t json_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

/// Array of integer tuples of length `width` at j[key].
inline std::vector<std::vector<std::int64_t>> json_tuples(const Json& j, const std::string& key, std::size_t width,
                                                          const std::string& file) {
  const auto& a = j.at(key);
  const std::string base = file + ": /" + key;
  if (!a.is_array()) throw InputError(base + ": expected an array");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string here = base + "/" + std::to_string(i);
    if (!a[i].is_array() || a[i].size() != width)
      throw InputError(here + ": expected " + std::to_string(width) + " integer coordinates");
    std::vector<std::int64_t> t;
    for (std::size_t c = 0; c < width; ++c) t.push_back(json_int(a[i][c], here + "/" + std::to_string(c)));
    out.push_back(t);
  }
  return out;
}

}  // namespace detail

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(detail::text_location(path, text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
}

/// {"rays": [[x,y,z], ...]} in cyclic order, or {"polygon": [[x,y], ...]}.
inline GorensteinCone cone_from_json(const Json& j, const std::string& file = "<cone>") {
  if (!j.is_object()) throw InputError(file + ": expected an object with \"rays\" or \"polygon\"");
  try {
    if (j.contains("rays")) {
      std::vector<Vec> rays;
      for (const auto& t : detail::json_tuples(j, "rays", 3, file)) rays.push_back({t[0], t[1], t[2]});
      return dual_cone(rays);
    }
    if (j.contains("polygon")) {
      std::vector<Point2> pts;
      for (const auto& t : detail::json_tuples(j, "polygon", 2, file)) pts.push_back({t[0], t[1]});
      return cone_over_polygon(pts);
    }
  } catch (const NotGorensteinError& e) {
    throw NotGorensteinError(file + ": " + e.what());
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(file, 0) == 0) throw;
    throw InputError(file + ": " + what);
  }
  throw InputError(file + ": expected a \"rays\" or \"polygon\" field");
}

inline GorensteinCone load_cone(const std::string& path) { return cone_from_json(read_json_file(path), path); }

/// Comma-separated integers, exactly `count` of them.
inline std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw InputError(what + ": '" + item + "' (item " + std::to_string(out.size() + 1) + ") is not an integer");
    out.push_back(v);
  }
  if (out.size() != count)
    throw InputError(what + ": expected " + std::to_string(count) + " comma-separated integers, got " +
                     std::to_string(out.size()));
  return out;
}

/// Raw M-coordinates "x,y,z".
inline Vec parse_degree(const std::string& text) {
  const auto v = parse_ints(text, 3, "--degree");
  return {v[0], v[1], v[2]};
}

/// "q,j,p" meaning qR* − p·s_j with j counted from 1.
inline Vec parse_family_degree(const std::string& text, const GorensteinCone& cone) {
  const auto v = parse_ints(text, 3, "--family");
  if (v[1] < 1 || v[1] > cone.size())
    throw InputError("--family: edge index j=" + std::to_string(v[1]) + " outside 1.." + std::to_string(cone.size()));
  return v[0] * cone.canonical_degree - v[2] * cone.dual_rays[static_cast<std::size_t>(v[1] - 1)];
}

/// "pig", "zero", or a file {"kappa": "1/2", "m": 1}.
inline BiderivationSpec parse_mu_p(const std::string& text) {
  if (text == "pig") return pi_g_spec();
  if (text == "zero") return zero_spec();
  const Json j = read_json_file(text);
  if (!j.is_object() || !j.contains("kappa") || !j.contains("m"))
    throw InputError(text + ": expected {\"kappa\": ..., \"m\": ...}");
  BiderivationSpec spec;
  spec.name = text;
  try {
    spec.kappa = j.at("kappa").get<Rational>();
  } catch (const std::exception&) {
    throw InputError(text + ": /kappa: expected an integer or a rational string like \"3/2\"");
  }
  spec.m = detail::json_int(j.at("m"), text + ": /m");
  try {
    require_supported(spec);
  } catch (const UnsupportedStructure& e) {
    throw InputError(text + ": " + e.what());
  }
  return spec;
}

}  // namespace toricdef
