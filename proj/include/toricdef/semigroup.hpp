#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/cone.hpp"
#include "toricdef/errors.hpp"
#include "toricdef/lattice.hpp"
#include "toricdef/lincomb.hpp"

namespace toricdef {

using AlgebraElement = LinComb<Vec>;

/// Lattice points λ of σ∨ with ⟨w, λ⟩ ≤ d, sorted by (weight, lexicographic).
inline std::vector<Vec> enumerate_window(const Cone& cone, const Vec& w, std::int64_t d) {
  for (const auto& s : cone.dual_rays)
    if (dot(w, s) <= 0) throw InputError("weight " + to_string(w, cone.dim) + " is not interior");
  if (d < 0) return {};
  // The window is the convex hull of 0 and the points d·s/⟨w,s⟩.
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (const auto& s : cone.dual_rays) {
    const std::int64_t ws = dot(w, s);
    for (int k = 0; k < cone.dim; ++k) {
      const std::int64_t num = detail::checked_mul(d, s[k]);
      lo[k] = std::min(lo[k], floor_div(num, ws));
      hi[k] = std::max(hi[k], ceil_div(num, ws));
    }
  }
  std::vector<Vec> out;
  Vec p{0, 0, 0};
  const std::int64_t zlo = cone.dim == 3 ? lo[2] : 0, zhi = cone.dim == 3 ? hi[2] : 0;
  for (p[0] = lo[0]; p[0] <= hi[0]; ++p[0])
    for (p[1] = lo[1]; p[1] <= hi[1]; ++p[1])
      for (p[2] = zlo; p[2] <= zhi; ++p[2])
        if (cone.contains_dual(p) && dot(w, p) <= d) out.push_back(p);
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    const auto wa = dot(w, a), wb = dot(w, b);
    return wa != wb ? wa < wb : a < b;
  });
  return out;
}

/// Generators and relation of the A_n surface semigroup.
struct SurfacePresentation {
  int n = 1;
  Vec S1{}, S2{}, S3{};
  std::string equation;
};

/// k[Λ] with Λ = σ∨ ∩ M and a finite enumeration window.
struct SemigroupAlgebra {
  Cone cone;
  Vec weight{};
  std::int64_t window_bound = 0;
  std::vector<Vec> window_basis;
  std::optional<SurfacePresentation> surface;

  bool contains(const Vec& lambda) const { return cone.contains_dual(lambda); }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [la, ca] : a)
      for (const auto& [lb, cb] : b) out.add(la + lb, ca * cb);
    return out;
  }

  std::vector<Vec> window(std::int64_t d) const { return enumerate_window(cone, weight, d); }
};

inline Vec default_weight(const Cone& cone) {
  Vec w{0, 0, 0};
  for (const auto& a : cone.rays) w += a;
  return w;
}

inline SemigroupAlgebra make_algebra(const Cone& cone, std::int64_t d,
                                     std::optional<Vec> weight = std::nullopt) {
  SemigroupAlgebra alg;
  alg.cone = cone;
  alg.weight = weight ? *weight : default_weight(cone);
  alg.window_bound = d;
  alg.window_basis = enumerate_window(cone, alg.weight, d);
  return alg;
}

/// σ_n has rays (1,0), (−n, n+1); Λ_n is generated by (0,1), (1,1), (n+1,n).
inline Cone surface_cone(int n) {
  if (n < 1) throw InputError("surface index n must be positive");
  return cone_2d(Vec{1, 0, 0}, Vec{-n, n + 1, 0});
}

inline SemigroupAlgebra surface_algebra(int n, std::int64_t d = 6) {
  SemigroupAlgebra alg = make_algebra(surface_cone(n), d);
  SurfacePresentation p;
  p.n = n;
  p.S1 = {0, 1, 0};
  p.S2 = {1, 1, 0};
  p.S3 = {n + 1, n, 0};
  p.equation = "xy - z^" + std::to_string(n + 1);
  alg.surface = p;
  return alg;
}

/// Exponents (X, Y, Z) of the normal form of x^λ in k[X,Y,Z]/(XY − Z^{n+1}),
/// with X = x^{S1}, Z = x^{S2}, Y = x^{S3}; at most one of X, Y is present.
struct SurfaceNormalForm {
  std::int64_t x = 0, y = 0, z = 0;
};

inline SurfaceNormalForm surface_normal_form(int n, const Vec& lambda) {
  const std::int64_t a = lambda[0], b = lambda[1];
  if (b >= a) return {b - a, 0, a};
  return {0, a - b, b - n * (a - b)};
}

struct JacobianRing {
  int dim = 0;
  std::vector<std::string> basis;
};

/// Dimension of k[x,y,z]/(∂g) for g = xy − z^{n+1}. The partials are unit
/// multiples of the monomials y, x, z^n, so the standard monomials of that
/// monomial ideal form a basis.
inline JacobianRing jacobian_ring_dim(int n) {
  if (n < 0) throw InputError("n must be nonnegative");
  const std::vector<std::array<int, 3>> gens = {{0, 1, 0}, {1, 0, 0}, {0, 0, n}};
  std::array<int, 3> bound{0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    bound[k] = -1;
    for (const auto& g : gens) {
      const bool pure = (g[(k + 1) % 3] == 0 && g[(k + 2) % 3] == 0);
      if (pure && (bound[k] < 0 || g[k] < bound[k])) bound[k] = g[k];
    }
    if (bound[k] < 0) throw InvariantViolation("Jacobian ideal is not zero-dimensional");
  }
  JacobianRing r;
  for (int i = 0; i < bound[0]; ++i)
    for (int j = 0; j < bound[1]; ++j)
      for (int k = 0; k < bound[2]; ++k) {
        bool divisible = false;
        for (const auto& g : gens)
          if (i >= g[0] && j >= g[1] && k >= g[2]) divisible = true;
        if (divisible) continue;
        ++r.dim;
        std::string m;
        auto put = [&](const char* v, int e) {
          if (e == 0) return;
          m += v;
          if (e > 1) m += "^" + std::to_string(e);
        };
        put("x", i);
        put("y", j);
        put("z", k);
        r.basis.push_back(m.empty() ? "1" : m);
      }
  return r;
}

}  // namespace toricdef
