#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricdef/cone.hpp"
#include "toricdef/t1.hpp"

namespace toricdef {

using HodgeDims = std::array<std::int64_t, 3>;  // i = 1, 2, 3

/// Infinite family R = qR* − p s_j, p ≥ p_min (case c).
struct DegreeFamily {
  std::string kind = "c";
  int j = 0;  // 0-based edge index
  std::int64_t q = 0;
  std::int64_t p_min = 0;
  HodgeDims dims{1, 2, 1};

  Vec degree(const GorensteinCone& cone, std::int64_t p) const {
    return q * cone.canonical_degree - p * cone.dual_rays[j];
  }
  friend bool operator==(const DegreeFamily&, const DegreeFamily&) = default;
};

struct SporadicEntry {
  Vec degree{};
  HodgeDims dims{};
  std::vector<std::string> labels;  // case labels, e.g. "a", "b(q=2,v=2)"
  friend bool operator==(const SporadicEntry&, const SporadicEntry&) = default;
};

struct DimensionReport {
  std::vector<SporadicEntry> sporadic;  // sorted by degree
  std::vector<DegreeFamily> families;   // sorted by (j, q)
  std::vector<std::string> notes;
  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// Smallest p with qR* − p s_j ∉ int σ∨.
inline std::int64_t family_p_min(const GorensteinCone& cone, int j, std::int64_t q) {
  std::optional<std::int64_t> best;
  for (int l = 0; l < cone.size(); ++l) {
    if (l == j || l == cone.next(j)) continue;
    const auto p = ceil_div(q, dot(cone.rays[l], cone.dual_rays[j]));
    if (!best || p < *best) best = p;
  }
  return *best;
}

namespace detail {

inline std::string label(const std::string& kind, const std::vector<std::pair<std::string, std::int64_t>>& kv) {
  std::string s = kind;
  if (kv.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < kv.size(); ++i)
    s += (i ? "," : "") + kv[i].first + "=" + std::to_string(kv[i].second);
  return s + ")";
}

inline bool nonzero(const HodgeDims& d) { return d[0] || d[1] || d[2]; }

}  // namespace detail

inline DimensionReport classify(const GorensteinCone& cone) {
  const int n = cone.size();
  const auto len = cone.edge_lengths();
  const Vec rs = cone.canonical_degree;
  std::map<Vec, SporadicEntry> sporadic;
  auto put = [&](const Vec& r, const HodgeDims& dims, const std::string& lab, bool override_dims) {
    auto& e = sporadic[r];
    e.degree = r;
    if (override_dims || !detail::nonzero(e.dims)) e.dims = dims;
    e.labels.push_back(lab);
  };

  // (a)
  const std::int64_t a = n - 3;
  if (a > 0) put(rs, {a, a, 0}, "a", false);

  // (b), with the (d) override for a strictly longest parallel pair.
  const std::int64_t lmax = *std::max_element(len.begin(), len.end());
  for (std::int64_t q = 2; q <= lmax; ++q) {
    std::int64_t v = 0;
    for (auto l : len) v += (l >= q);
    const HodgeDims dims{std::max<std::int64_t>(0, v - 2), std::max<std::int64_t>(0, 2 * v - 3),
                         std::max<std::int64_t>(0, v - 1)};
    if (detail::nonzero(dims)) put(q * rs, dims, detail::label("b", {{"q", q}, {"v", v}}), false);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      if (!cone.parallel_edges(j, k)) continue;
      std::int64_t other = 0;
      for (int l = 0; l < n; ++l)
        if (l != j && l != k) other = std::max(other, len[l]);
      for (std::int64_t q = other + 1; q <= std::min(len[j], len[k]); ++q)
        if (q >= 2)
          put(q * rs, {1, 2, 1},
              detail::label("d", {{"j", j + 1}, {"k", k + 1}, {"q", q}}), true);
    }

  // (e)
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k || !cone.parallel_edges(j, k)) continue;
      const auto d = dot(cone.rays[j], cone.dual_rays[k]);
      for (std::int64_t q = 1; q <= len[j]; ++q)
        for (std::int64_t p = 1; p * d <= len[k] - q; ++p)
          put(q * rs + p * cone.dual_rays[j], {1, 2, 1},
              detail::label("e", {{"j", j + 1}, {"k", k + 1}, {"q", q}, {"p", p}}), true);
    }

  DimensionReport report;
  for (auto& [r, e] : sporadic) report.sporadic.push_back(e);

  // (c)
  for (int j = 0; j < n; ++j)
    for (std::int64_t q = 2; q <= len[j]; ++q)
      report.families.push_back(DegreeFamily{"c", j, q, family_p_min(cone, j, q), {1, 2, 1}});

  for (const auto& e : report.sporadic)
    if (e.dims[0] == 0)
      report.notes.push_back("degree -" + to_string(e.degree) + " has T1 dims (0," +
                             std::to_string(e.dims[1]) + "," + std::to_string(e.dims[2]) +
                             "): invisible in Hodge weight 1, so a T1_(1)-only listing omits it");
  for (const auto& f : report.families) {
    if (f.p_min < 2) continue;
    for (const auto& g : report.families)
      if (g.j == f.j && g.q == f.q - 1)
        report.notes.push_back(
            "family j=" + std::to_string(f.j + 1) + ", q=" + std::to_string(f.q) + " starts at p=" +
            std::to_string(f.p_min) + "; the bound p>=" + std::to_string(f.p_min) +
            " read with q=" + std::to_string(g.q) + " covers only part of family j=" +
            std::to_string(g.j + 1) + ", q=" + std::to_string(g.q) + ", which starts at p=" +
            std::to_string(g.p_min));
  }
  return report;
}

struct DegreeLookup {
  HodgeDims dims{0, 0, 0};
  std::vector<std::string> labels;
};

/// Dimensions the report assigns to a single degree R (i.e. to T¹(−R)).
inline DegreeLookup report_dims(const GorensteinCone& cone, const DimensionReport& report,
                                const Vec& degree) {
  DegreeLookup out;
  for (const auto& e : report.sporadic)
    if (e.degree == degree) {
      out.dims = e.dims;
      out.labels = e.labels;
    }
  for (const auto& f : report.families) {
    const int k = cone.next(f.j);
    if (dot(cone.rays[f.j], degree) != f.q || dot(cone.rays[k], degree) != f.q) continue;
    const Vec diff = f.q * cone.canonical_degree - degree;
    const Vec& s = cone.dual_rays[f.j];
    // diff = p·s for an integer p.
    std::int64_t p = 0;
    bool ok = true;
    int pivot = -1;
    for (int c = 0; c < 3; ++c)
      if (s[c] != 0) pivot = c;
    if (diff[pivot] % s[pivot] != 0) ok = false;
    if (ok) {
      p = diff[pivot] / s[pivot];
      ok = (p * s == diff);
    }
    if (!ok || p < f.p_min) continue;
    for (int i = 0; i < 3; ++i) out.dims[i] += f.dims[i];
    out.labels.push_back(detail::label("c", {{"j", f.j + 1}, {"q", f.q}, {"p", p}}));
  }
  return out;
}

struct Mismatch {
  Vec degree{};
  int i = 1;
  std::int64_t classified = 0;
  std::int64_t evaluated = 0;
  std::string label;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Degrees qR* + p s_j (|q| ≤ q_max, |p| ≤ p_max) and all degrees with every
/// |⟨a_j,R⟩| ≤ q_max, sorted.
inline std::vector<Vec> scan_degrees(const GorensteinCone& cone, std::int64_t q_max,
                                     std::int64_t p_max) {
  std::set<Vec> out;
  for (std::int64_t q = -q_max; q <= q_max; ++q)
    for (std::int64_t p = -p_max; p <= p_max; ++p)
      for (const auto& s : cone.dual_rays) out.insert(q * cone.canonical_degree + p * s);
  const Vec &a0 = cone.rays[0], &a1 = cone.rays[1], &a2 = cone.rays[2];
  const std::int64_t det = det3(a0, a1, a2);
  const Vec c0 = cross(a1, a2), c1 = cross(a2, a0), c2 = cross(a0, a1);
  for (std::int64_t b0 = -q_max; b0 <= q_max; ++b0)
    for (std::int64_t b1 = -q_max; b1 <= q_max; ++b1)
      for (std::int64_t b2 = -q_max; b2 <= q_max; ++b2) {
        const Vec num = b0 * c0 + b1 * c1 + b2 * c2;
        if (num[0] % det || num[1] % det || num[2] % det) continue;
        const Vec r{num[0] / det, num[1] / det, num[2] / det};
        bool inside = true;
        for (const auto& a : cone.rays) inside = inside && std::abs(dot(a, r)) <= q_max;
        if (inside) out.insert(r);
      }
  return {out.begin(), out.end()};
}

/// Compares the classification with the evaluator for i = 1..5 on the scan.
inline std::vector<Mismatch> crosscheck(const GorensteinCone& cone, std::int64_t q_max,
                                        std::int64_t p_max) {
  const auto report = classify(cone);
  std::vector<Mismatch> out;
  for (const auto& r : scan_degrees(cone, q_max, p_max)) {
    const auto look = report_dims(cone, report, r);
    for (int i = 1; i <= 5; ++i) {
      const std::int64_t c = i <= 3 ? look.dims[i - 1] : 0;
      const std::int64_t e = t1_dim(cone, r, i);
      if (c != e) {
        std::string lab;
        for (const auto& l : look.labels) lab += (lab.empty() ? "" : ";") + l;
        out.push_back({r, i, c, e, lab});
      }
    }
  }
  return out;
}

/// Computable parts of HH² and HH³ assembled from T¹ data.
struct HHReport {
  struct Row {
    std::string what;  // degree or family description
    std::int64_t dim = 0;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> hh2_t1;  // T¹_(1) rows
  std::vector<Row> hh3_t1;  // T¹_(2) rows
  std::vector<std::string> hh2_placeholders{"T0_(2): not computed (external description)"};
  std::vector<std::string> hh3_placeholders{"T2_(1): not computed (external description)",
                                            "T0_(3): not computed (external description)"};
  friend bool operator==(const HHReport&, const HHReport&) = default;
};

inline HHReport hh_assembly(const GorensteinCone& cone, const DimensionReport& report) {
  (void)cone;
  HHReport h;
  auto fam = [](const DegreeFamily& f) {
    return "-(" + std::to_string(f.q) + "R* - p s_" + std::to_string(f.j + 1) +
           "), p >= " + std::to_string(f.p_min);
  };
  for (const auto& e : report.sporadic) {
    if (e.dims[0]) h.hh2_t1.push_back({"-" + to_string(e.degree), e.dims[0]});
    if (e.dims[1]) h.hh3_t1.push_back({"-" + to_string(e.degree), e.dims[1]});
  }
  for (const auto& f : report.families) {
    if (f.dims[0]) h.hh2_t1.push_back({fam(f), f.dims[0]});
    if (f.dims[1]) h.hh3_t1.push_back({fam(f), f.dims[1]});
  }
  return h;
}

}  // namespace toricdef
