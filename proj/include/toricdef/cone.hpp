#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "toricdef/errors.hpp"
#include "toricdef/lattice.hpp"
#include "toricdef/linalg.hpp"

namespace toricdef {

/// A rational polyhedral cone σ in N (dimension 2 or 3) together with the
/// generators of σ∨ in M. In three dimensions the rays are cyclically ordered
/// around the cone and dual_rays[j] is orthogonal to rays[j] and rays[j+1].
struct Cone {
  int dim = 3;
  std::vector<Vec> rays;
  std::vector<Vec> dual_rays;

  /// λ ∈ σ∨, i.e. ⟨a, λ⟩ ≥ 0 for every ray a.
  bool contains_dual(const Vec& lambda) const {
    return std::all_of(rays.begin(), rays.end(),
                       [&](const Vec& a) { return dot(a, lambda) >= 0; });
  }
};

/// Cone over a lattice polygon at height one, with its canonical degree R*.
struct GorensteinCone {
  std::vector<Vec> rays;       // a_1..a_N, cyclic
  std::vector<Vec> dual_rays;  // s_1..s_N, s_j ⟂ a_j, a_{j+1}
  Vec canonical_degree{};      // R*

  int size() const { return static_cast<int>(rays.size()); }
  int next(int j) const { return (j + 1) % size(); }
  /// d_j = a_{j+1} - a_j.
  Vec edge(int j) const { return rays[next(j)] - rays[j]; }
  std::int64_t edge_length(int j) const { return lattice_length(edge(j)); }
  std::vector<std::int64_t> edge_lengths() const {
    std::vector<std::int64_t> out;
    for (int j = 0; j < size(); ++j) out.push_back(edge_length(j));
    return out;
  }
  bool parallel_edges(int j, int k) const { return is_zero(cross(edge(j), edge(k))); }
  std::vector<std::int64_t> weights(const Vec& degree) const {
    std::vector<std::int64_t> w;
    for (const auto& a : rays) w.push_back(dot(a, degree));
    return w;
  }
  Cone cone() const { return Cone{3, rays, dual_rays}; }
};

/// For a cyclic list of 3D rays, the primitive inner normals of the 2-faces
/// spanned by consecutive rays. Throws InputError when the list is not the
/// cyclically ordered ray set of a strongly convex full-dimensional cone.
inline std::vector<Vec> adjacent_face_normals(const std::vector<Vec>& rays) {
  const int n = static_cast<int>(rays.size());
  if (n < 3) throw InputError("a three-dimensional cone needs at least 3 rays");
  for (const auto& a : rays)
    if (!is_primitive(a)) throw InputError("ray " + to_string(a) + " is not primitive");
  std::vector<Vec> normals;
  for (int j = 0; j < n; ++j) {
    const Vec& a = rays[j];
    const Vec& b = rays[(j + 1) % n];
    Vec c = cross(a, b);
    if (is_zero(c))
      throw InputError("rays " + to_string(a) + " and " + to_string(b) + " are collinear");
    c = primitive(c);
    const std::int64_t probe = dot(c, rays[(j + 2) % n]);
    if (probe == 0) throw InputError("rays are not in cyclic convex position (coplanar triple)");
    if (probe < 0) c = -c;
    for (int l = 0; l < n; ++l) {
      if (l == j || l == (j + 1) % n) continue;
      if (dot(c, rays[l]) <= 0)
        throw InputError("rays are not cyclically ordered around a convex cone (ray " +
                         to_string(rays[l]) + ")");
    }
    normals.push_back(c);
  }
  return normals;
}

/// Dual cone with the edge-adjacent labeling and the canonical degree.
inline GorensteinCone dual_cone(const std::vector<Vec>& rays) {
  GorensteinCone g;
  g.rays = rays;
  g.dual_rays = adjacent_face_normals(rays);
  // Solve ⟨a_j, R⟩ = 1 using the first three rays, which are independent.
  const Vec &a0 = rays[0], &a1 = rays[1], &a2 = rays[2];
  const std::int64_t det = det3(a0, a1, a2);
  if (det == 0) throw InputError("first three rays are linearly dependent");
  // R = (a1×a2 + a2×a0 + a0×a1) / det solves the system.
  const Vec num = cross(a1, a2) + cross(a2, a0) + cross(a0, a1);
  for (auto x : num)
    if (x % det != 0) throw NotGorensteinError("no integral degree pairs to 1 with the rays");
  g.canonical_degree = {num[0] / det, num[1] / det, num[2] / det};
  for (const auto& a : rays)
    if (dot(a, g.canonical_degree) != 1)
      throw NotGorensteinError("rays do not lie at height one for a common degree");
  return g;
}

using Point2 = std::array<std::int64_t, 2>;

/// Lifts a lattice polygon to height one and orders its vertices
/// counterclockwise before taking the dual cone.
inline GorensteinCone cone_over_polygon(std::vector<Point2> vertices) {
  const auto n = static_cast<std::int64_t>(vertices.size());
  if (n < 3) throw InputError("a polygon needs at least 3 vertices");
  std::int64_t sx = 0, sy = 0;
  for (const auto& v : vertices) {
    sx = detail::checked_add(sx, v[0]);
    sy = detail::checked_add(sy, v[1]);
  }
  auto rel = [&](const Point2& v) {
    return Vec{detail::checked_mul(n, v[0]) - sx, detail::checked_mul(n, v[1]) - sy, 0};
  };
  auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  for (const auto& v : vertices)
    if (is_zero(rel(v))) throw InputError("polygon vertex coincides with the centroid");
  std::sort(vertices.begin(), vertices.end(), [&](const Point2& p, const Point2& q) {
    const Vec u = rel(p), w = rel(q);
    if (half(u) != half(w)) return half(u) < half(w);
    return det2(u, w) > 0;
  });
  std::vector<Vec> rays;
  for (const auto& v : vertices) rays.push_back({v[0], v[1], 1});
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t k = i + 1; k < rays.size(); ++k)
      if (rays[i] == rays[k]) throw InputError("duplicate polygon vertex");
  return dual_cone(rays);
}

/// A two-dimensional cone from its two primitive rays.
inline Cone cone_2d(const Vec& a, const Vec& b) {
  if (!is_primitive(a) || !is_primitive(b)) throw InputError("2D rays must be primitive");
  if (det2(a, b) == 0) throw InputError("2D rays must be independent");
  Vec sa = primitive(Vec{-a[1], a[0], 0});
  if (dot(sa, b) < 0) sa = -sa;
  Vec sb = primitive(Vec{-b[1], b[0], 0});
  if (dot(sb, a) < 0) sb = -sb;
  return Cone{2, {a, b}, {sa, sb}};
}

inline int hodge_w(std::int64_t pairing) { return pairing > 1 ? 2 : (pairing == 1 ? 1 : 0); }

/// Q(R) = σ ∩ {⟨·, R⟩ = 1}.
struct QPolyhedron {
  Vec degree{};
  std::vector<std::int64_t> vertex_weights;
  /// ā_j = a_j / ⟨a_j, R⟩ when ⟨a_j, R⟩ ≥ 1.
  std::vector<std::optional<std::array<Rational, 3>>> vertices;
  std::vector<std::pair<int, int>> compact_edges;
  std::vector<int> W;
  bool compact = false;
};

inline QPolyhedron q_polyhedron(const GorensteinCone& cone, const Vec& degree) {
  QPolyhedron q;
  q.degree = degree;
  q.vertex_weights = cone.weights(degree);
  q.compact = true;
  for (int j = 0; j < cone.size(); ++j) {
    const auto w = q.vertex_weights[j];
    q.W.push_back(hodge_w(w));
    if (w <= 0) q.compact = false;
    if (w >= 1) {
      const auto& a = cone.rays[j];
      q.vertices.emplace_back(std::array<Rational, 3>{Rational(a[0], w), Rational(a[1], w),
                                                      Rational(a[2], w)});
      for (auto& c : *q.vertices.back()) c.canonicalize();
    } else {
      q.vertices.emplace_back(std::nullopt);
    }
  }
  for (int j = 0; j < cone.size(); ++j) {
    const int k = cone.next(j);
    if (q.vertex_weights[j] >= 1 && q.vertex_weights[k] >= 1) q.compact_edges.emplace_back(j, k);
  }
  return q;
}

inline bool in_interior(const Vec& degree, const GorensteinCone& cone) {
  for (const auto& a : cone.rays)
    if (dot(a, degree) <= 0) return false;
  return true;
}

}  // namespace toricdef
