#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "toricdef/cone.hpp"
#include "toricdef/errors.hpp"
#include "toricdef/linalg.hpp"

namespace toricdef {

/// C(a, b) with C(a, b) = 0 for b < 0, a < 0 or a < b.
inline std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = detail::checked_mul(r, a - b + k) / k;
  return r;
}

/// 1 iff 2 ≤ ⟨a_j,R⟩ = ⟨a_{j+1},R⟩ ≤ ℓ(j).
inline int edge_surface_t1(const GorensteinCone& cone, int j, const Vec& degree) {
  if (j < 0 || j >= cone.size()) throw InputError("edge index out of range");
  const auto u = dot(cone.rays[j], degree);
  const auto v = dot(cone.rays[cone.next(j)], degree);
  return (u >= 2 && u == v && u <= cone.edge_length(j)) ? 1 : 0;
}

/// span_k K^R_{j,j+1} for a compact edge. Its image in the rank-two quotient
/// M → Z², r ↦ (⟨a_j,r⟩, ⟨a_{j+1},r⟩), is spanned by the pairs (u, v) with
/// 0 ≤ u < ⟨a_j,R⟩, 0 ≤ v < ⟨a_{j+1},R⟩ and u ≡ v mod ℓ(j); the kernel of
/// that map (the line through s_j) always lies in the span.
struct EdgeSpan {
  int quotient_dim = 0;  // 0, 1 or 2
  /// Linear forms on M cutting out the span (as vectors of N).
  std::vector<Vec> constraints;
  int dim() const { return 1 + quotient_dim; }
};

inline EdgeSpan edge_span(const GorensteinCone& cone, int j, const Vec& degree) {
  const int k = cone.next(j);
  const auto wj = dot(cone.rays[j], degree), wk = dot(cone.rays[k], degree);
  if (wj < 1 || wk < 1) throw ContractError("edge_span needs a compact edge");
  const auto len = cone.edge_length(j);
  EdgeSpan span;
  std::vector<std::array<std::int64_t, 2>> pairs;
  // Pairs with u ≡ v mod ℓ: stepping v = u + mℓ.
  for (std::int64_t u = 0; u < wj; ++u)
    for (std::int64_t v = u % len; v < wk; v += len)
      if (u != 0 || v != 0) pairs.push_back({u, v});
  if (pairs.empty()) {
    span.constraints = {cone.rays[j], cone.rays[k]};
    return span;
  }
  const auto& first = pairs.front();
  for (const auto& p : pairs)
    if (p[0] * first[1] - p[1] * first[0] != 0) {
      span.quotient_dim = 2;
      return span;
    }
  span.quotient_dim = 1;
  const Vec row = first[1] * cone.rays[j] - first[0] * cone.rays[k];
  span.constraints = {row};
  return span;
}

/// dim ∩_j span K^R_{j,j+1}; Q(R) must be compact.
inline int span_intersection_dim(const GorensteinCone& cone, const Vec& degree) {
  if (!in_interior(degree, cone))
    throw ContractError("span intersection is only defined for compact Q(R)");
  RationalMatrix rows;
  for (int j = 0; j < cone.size(); ++j)
    for (const auto& c : edge_span(cone, j, degree).constraints)
      rows.push_back({Rational(c[0]), Rational(c[1]), Rational(c[2])});
  return 3 - static_cast<int>(rank(rows));
}

inline std::int64_t s_i(const GorensteinCone& cone, const Vec& degree, int i) {
  if (!in_interior(degree, cone)) return 0;
  return binom(span_intersection_dim(cone, degree), i);
}

/// True when consecutive pairings all differ, which forces T¹_(i)(−R) = 0.
inline bool vanishing_prefilter(const GorensteinCone& cone, const Vec& degree) {
  for (int j = 0; j < cone.size(); ++j)
    if (dot(cone.rays[j], degree) == dot(cone.rays[cone.next(j)], degree)) return false;
  return true;
}

struct T1Ingredients {
  int i = 1;
  std::vector<std::int64_t> V;                      // per vertex
  std::vector<std::pair<int, std::int64_t>> Q;      // per compact edge (index, value)
  std::int64_t s = 0;
  std::int64_t ambient = 0;                         // C(3, i)
  std::int64_t raw() const {
    std::int64_t r = s - ambient;
    for (auto v : V) r += v;
    for (const auto& q : Q) r -= q.second;
    return r;
  }
  std::int64_t dim() const { return std::max<std::int64_t>(0, raw()); }
};

inline T1Ingredients t1_ingredients(const GorensteinCone& cone, const Vec& degree, int i) {
  constexpr int n = 3;
  T1Ingredients t;
  t.i = i;
  const auto q = q_polyhedron(cone, degree);
  for (int j = 0; j < cone.size(); ++j) {
    const auto w = q.vertex_weights[j];
    t.V.push_back(w > 1 ? binom(n, i) : (w == 1 ? binom(n - 1, i) : 0));
  }
  for (const auto& [j, k] : q.compact_edges) {
    const int tj = edge_surface_t1(cone, j, degree);
    t.Q.emplace_back(j, binom(q.W[j] + q.W[k] + n - 4 - tj, i));
  }
  t.s = s_i(cone, degree, i);
  t.ambient = binom(n, i);
  return t;
}

inline std::int64_t t1_dim(const GorensteinCone& cone, const Vec& degree, int i) {
  if (i < 1) throw InputError("Hodge index must be positive");
  return t1_ingredients(cone, degree, i).dim();
}

}  // namespace toricdef
