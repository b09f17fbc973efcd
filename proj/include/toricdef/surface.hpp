#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/cochain.hpp"
#include "toricdef/deformation.hpp"
#include "toricdef/errors.hpp"
#include "toricdef/linalg.hpp"
#include "toricdef/semigroup.hpp"

namespace toricdef {

// ---- T¹ of A_n and the E₁ page --------------------------------------------

/// Lattice degree with ⟨a_1,R⟩ = p1 and ⟨a_2,R⟩ = p2 on σ_n, if one exists.
inline std::optional<Vec> surface_degree(int n, std::int64_t p1, std::int64_t p2) {
  const std::int64_t num = p2 + n * p1;
  if (num % (n + 1) != 0) return std::nullopt;
  return Vec{p1, num / (n + 1), 0};
}

/// (dim T¹_(1)(−R), dim T¹_(2)(−R)) for every degree with |⟨a_i,R⟩| ≤ window.
/// Both are 1 exactly when the two pairings agree and lie in [2, ℓ], where
/// ℓ = n+1 is the lattice length of the segment cut out by ⟨·,R*⟩ = 1.
inline std::map<Vec, std::pair<std::int64_t, std::int64_t>> surface_t1_dims(int n,
                                                                           std::int64_t window) {
  if (n < 1) throw InputError("surface index n must be positive");
  const std::int64_t ell = n + 1;
  std::map<Vec, std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p1 = -window; p1 <= window; ++p1)
    for (std::int64_t p2 = -window; p2 <= window; ++p2) {
      const auto r = surface_degree(n, p1, p2);
      if (!r) continue;
      const std::int64_t d = (p1 == p2 && p1 >= 2 && p1 <= ell) ? 1 : 0;
      out[*r] = {d, d};
    }
  return out;
}

struct PageEntry {
  int j = 1, k = 1;  // E₁^{j,k} = H^{j+k−1}_(j)
  int m = 1;         // Hochschild degree j+k−1
  std::string status;  // "dim", "module" or "unknown"
  std::int64_t dim = 0;
  friend bool operator==(const PageEntry&, const PageEntry&) = default;
};

struct SpectralPage {
  int n = 1;
  int j_max = 0, k_max = 0;
  std::vector<PageEntry> entries;  // j-major
  friend bool operator==(const SpectralPage&, const SpectralPage&) = default;

  const PageEntry& at(int j, int k) const {
    if (j < 1 || j > j_max || k < 1 || k > k_max) throw InputError("E1 index out of range");
    return entries[static_cast<std::size_t>((j - 1) * k_max + (k - 1))];
  }
  /// The row E₁^{•,k}, which d₁ maps along.
  std::vector<PageEntry> row(int k) const {
    std::vector<PageEntry> r;
    for (int j = 1; j <= j_max; ++j) r.push_back(at(j, k));
    return r;
  }
};

/// Uses H^m_(i) ≅ T^{m−i}_(i): T^{i−1}_(i) ≅ T^i_(i) have dimension n for
/// i ≥ 3 and every other T^k_(i) with i ≥ 3 vanishes; T⁰_(1), T⁰_(2) are
/// modules, T¹_(1) and T¹_(2) have total dimension n, T²_(1) = 0.
inline SpectralPage e1_page(int n, int j_max = 6, int k_max = 7) {
  if (n < 1) throw InputError("surface index n must be positive");
  const std::int64_t jac = jacobian_ring_dim(n).dim;
  SpectralPage page{n, j_max, k_max, {}};
  for (int j = 1; j <= j_max; ++j)
    for (int k = 1; k <= k_max; ++k) {
      PageEntry e{j, k, j + k - 1, "dim", 0};
      const int t = e.m - j;  // T^t_(j)
      if (j <= 2) {
        if (t == 0) e.status = "module";
        else if (t == 1) e.dim = jac;
        else if (j == 1 && t == 2) e.dim = 0;
        else e.status = "unknown";
      } else if (t == j - 1 || t == j) {
        e.dim = jac;
      }
      page.entries.push_back(e);
    }
  return page;
}

// ---- brackets of the form κ·det(λ1,λ2)·x^{λ1+λ2−mS2} ------------------------

struct BiderivationSpec {
  Rational kappa = 1;
  std::int64_t m = 1;  // degree −mS2
  std::string name = "pig";
  friend bool operator==(const BiderivationSpec&, const BiderivationSpec&) = default;
};

inline BiderivationSpec pi_g_spec() { return {Rational(1), 1, "pig"}; }
inline BiderivationSpec zero_spec() { return {Rational(0), 1, "zero"}; }

/// Throws UnsupportedStructure unless the bracket is a biderivation of Λ;
/// that needs m ≤ 1 (for m ≥ 2 the pair (S1, S2) lands outside Λ).
inline void require_supported(const BiderivationSpec& spec) {
  if (spec.kappa != 0 && spec.m > 1)
    throw UnsupportedStructure("bracket det(l1,l2) x^(l1+l2-" + std::to_string(spec.m) +
                               "S2) is not a biderivation of the A_n semigroup (needs m <= 1)");
}

/// f₀(λ1,λ2) = det(λ1,λ2); f₀(S1,S3) = −(n+1).
inline SCochain bracket_cochain(const SemigroupAlgebra& alg, const BiderivationSpec& spec) {
  require_supported(spec);
  const Vec s2{1, 1, 0};
  const Rational kappa = spec.kappa;
  return monomial_cochain(alg, 2, spec.m * s2, [kappa](const std::vector<Vec>& a) -> Rational {
    return kappa * det2(a[0], a[1]);
  });
}

inline SCochain pi_g(const SemigroupAlgebra& alg) { return bracket_cochain(alg, pi_g_spec()); }

// ---- d₁ = −[μ_p,·] : H¹_(1) → H²_(2), degreewise ----------------------------

namespace detail {

/// λ = a·S1 + b·S2 (S1, S2 are a lattice basis).
inline std::pair<std::int64_t, std::int64_t> s_coords(const Vec& l) { return {l[1] - l[0], l[0]}; }

/// Skew bi-additive form with F(S1,S2) = 1, in S-coordinates.
inline std::int64_t s_det(const Vec& u, const Vec& v) {
  const auto [a1, b1] = s_coords(u);
  const auto [a2, b2] = s_coords(v);
  return a1 * b2 - a2 * b1;
}

inline std::vector<std::pair<Vec, Vec>> generator_pairs(const SurfacePresentation& p) {
  return {{p.S1, p.S2}, {p.S1, p.S3}, {p.S2, p.S3}};
}

/// Rows of the derivation-data system: unknowns (v1, v2, v3) = φ on S1, S2, S3.
inline RationalMatrix derivation_constraints(const SemigroupAlgebra& alg, const Vec& r) {
  const int n = alg.surface->n;
  RationalMatrix rows{{Rational(1), Rational(-(n + 1)), Rational(1)}};
  for (const auto& l : alg.window_basis) {
    if (alg.contains(l + r)) continue;
    const auto [a, b] = s_coords(l);
    if (a == 0 && b == 0) continue;
    rows.push_back({Rational(a), Rational(b), Rational(0)});
  }
  return rows;
}

/// Rows of the skew-bideriviation system: unknowns F on (S1,S2), (S1,S3), (S2,S3).
inline RationalMatrix biderivation_constraints(const SemigroupAlgebra& alg, const Vec& r) {
  const int n = alg.surface->n;
  RationalMatrix rows{{Rational(-(n + 1)), Rational(1), Rational(0)},
                      {Rational(-1), Rational(0), Rational(1)}};
  std::set<std::int64_t> seen;
  for (const auto& l1 : alg.window_basis)
    for (const auto& l2 : alg.window_basis) {
      const auto d = s_det(l1, l2);
      if (d == 0 || alg.contains(l1 + l2 + r) || !seen.insert(d).second) continue;
      rows.push_back({Rational(d), Rational(0), Rational(0)});
    }
  return rows;
}

inline bool satisfies(const RationalMatrix& rows, const RationalVector& v) {
  for (const auto& row : rows) {
    Rational s = 0;
    for (std::size_t c = 0; c < v.size(); ++c) s += row[c] * v[c];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Degree-r derivation from generator data v = (φ(S1), φ(S2), φ(S3)).
inline SCochain derivation_cochain(const SemigroupAlgebra& alg, const Vec& r, const RationalVector& v) {
  const Rational v1 = v[0], v2 = v[1];
  return monomial_cochain(alg, 1, -r, [v1, v2](const std::vector<Vec>& a) -> Rational {
    const auto [x, y] = detail::s_coords(a[0]);
    return v1 * x + v2 * y;
  });
}

struct GradedMapMatrix {
  Vec source_degree{};
  Vec target_degree{};
  std::vector<RationalVector> source_basis;  // (φ(S1), φ(S2), φ(S3))
  std::vector<RationalVector> target_basis;  // F on (S1,S2), (S1,S3), (S2,S3)
  RationalMatrix matrix;                     // target_dim × source_dim
  std::size_t rank = 0;

  std::size_t source_dim() const { return source_basis.size(); }
  std::size_t target_dim() const { return target_basis.size(); }
};

/// Matrix of d₁ = −[μ_p,·] from degree-r derivations to degree r − mS2 skew
/// biderivations. alg must be a surface algebra whose window contains the
/// generators; its window also carries the support constraints, and every
/// image is re-verified against the full target system on window pairs.
inline GradedMapMatrix build_d1_matrix(const SemigroupAlgebra& alg, const BiderivationSpec& spec,
                                       const Vec& r) {
  if (!alg.surface) throw ContractError("build_d1_matrix needs a surface algebra");
  require_supported(spec);
  const auto& pres = *alg.surface;
  GradedMapMatrix g;
  g.source_degree = r;
  g.target_degree = r - spec.m * pres.S2;
  g.source_basis = nullspace(detail::derivation_constraints(alg, r), 3);
  const auto target_rows = detail::biderivation_constraints(alg, g.target_degree);
  g.target_basis = nullspace(target_rows, 3);
  g.matrix.assign(g.target_dim(), RationalVector(g.source_dim(), Rational(0)));
  if (g.source_dim() == 0 || g.target_dim() == 0) return g;

  const SCochain mu_p = bracket_cochain(alg, spec);
  RationalMatrix tb(3, RationalVector(g.target_dim()));
  for (std::size_t b = 0; b < g.target_dim(); ++b)
    for (int c = 0; c < 3; ++c) tb[c][b] = g.target_basis[b][c];

  for (std::size_t s = 0; s < g.source_dim(); ++s) {
    const SCochain theta = derivation_cochain(alg, r, g.source_basis[s]);
    const SCochain image = Rational(-1) * gerstenhaber_bracket(mu_p, theta);
    RationalVector y;
    for (const auto& [u, v] : detail::generator_pairs(pres)) {
      const auto out = image({u, v});
      const Vec e = u + v + g.target_degree;
      for (const auto& [lam, c] : out)
        if (lam != e) throw InvariantViolation("d1 image is not homogeneous of the target degree");
      y.push_back(out.coefficient(e));
    }
    if (!detail::satisfies(target_rows, y))
      throw InvariantViolation("d1 image violates the biderivation constraints at " + to_string(r));
    const auto c = solve(tb, y, g.target_dim());
    if (!c) throw InvariantViolation("d1 image is outside the target span at " + to_string(r));
    for (std::size_t b = 0; b < g.target_dim(); ++b) g.matrix[b][s] = (*c)[b];
    // Full extension check: image(λ1,λ2) = F12·s_det(λ1,λ2)·x^{λ1+λ2+r'}.
    for (const auto& l1 : alg.window_basis)
      for (const auto& l2 : alg.window_basis) {
        AlgebraElement want;
        const Vec e = l1 + l2 + g.target_degree;
        if (alg.contains(e)) want.add(e, y[0] * detail::s_det(l1, l2));
        if (image({l1, l2}) != want)
          throw InvariantViolation("d1 image is not the bi-additive extension of its generator values");
      }
  }
  g.rank = toricdef::rank(g.matrix);
  return g;
}

struct PoissonCohomology {
  int n = 1;
  BiderivationSpec mu_p;
  std::int64_t window = 0;
  std::map<Vec, std::int64_t> h0;     // nonzero kernel dims of d₁ per source degree
  std::map<Vec, std::int64_t> coker;  // nonzero coker dims of d₁ per target degree
  std::int64_t coker_total = 0;
  std::int64_t h2_1 = 0;  // total dim H²_(1)
  std::int64_t h3_2 = 0;  // total dim H³_(2)
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::vector<std::string> spot_checks;
  std::vector<std::string> higher;  // shape of H^k, k ≥ 3
  friend bool operator==(const PoissonCohomology&, const PoissonCohomology&) = default;
};

/// Degrees with both pairings in [lo, hi].
inline std::vector<Vec> surface_degrees(int n, std::int64_t lo, std::int64_t hi) {
  std::vector<Vec> out;
  for (std::int64_t p1 = lo; p1 <= hi; ++p1)
    for (std::int64_t p2 = lo; p2 <= hi; ++p2)
      if (auto r = surface_degree(n, p1, p2)) out.push_back(*r);
  std::sort(out.begin(), out.end());
  return out;
}

/// e_3(2)[μ_p, ξ_1] = −[μ, ξ_{p,1}] for the first-order deformation in
/// degree −kS2; this makes the H²_(1) class of ξ_1 map to zero in H³_(2).
inline bool zero_product_spot_check(const SemigroupAlgebra& alg, const BiderivationSpec& spec, int k,
                                    const std::vector<Vec>& basis) {
  const SurfaceDeformation def(alg.surface->n, k, 1);
  const SCochain mu_p = bracket_cochain(alg, spec);
  const SCochain xi1 = def.xi(alg, 1);
  const SCochain xip1 = spec.kappa * def.xi_p(alg, 1);
  const SCochain lhs = hodge_project(gerstenhaber_bracket(mu_p, xi1), 2);
  const SCochain rhs = Rational(-1) * gerstenhaber_bracket(product_cochain(alg), xip1);
  return !first_difference(lhs, rhs, basis);
}

/// H⁰, H¹, H² of the Poisson algebra (A_n, μ_p) from the E₁ page. Degrees
/// with both pairings in [−1, window] are scanned; outside them both the
/// derivation and the biderivation spaces vanish.
inline PoissonCohomology poisson_cohomology(int n, const BiderivationSpec& spec, std::int64_t window) {
  require_supported(spec);
  const std::int64_t bound = std::max<std::int64_t>(window, 2 * (n + 1));
  const SemigroupAlgebra alg = surface_algebra(n, bound);
  PoissonCohomology pc;
  pc.n = n;
  pc.mu_p = spec;
  pc.window = window;
  const Vec s2 = alg.surface->S2;
  for (const auto& r : surface_degrees(n, -1, window)) {
    const auto g = build_d1_matrix(alg, spec, r);
    if (const auto k = static_cast<std::int64_t>(g.source_dim() - g.rank)) pc.h0[r] = k;
    const auto h = build_d1_matrix(alg, spec, r + spec.m * s2);  // maps onto degree r
    if (const auto c = static_cast<std::int64_t>(h.target_dim() - h.rank)) {
      pc.coker[r] = c;
      pc.coker_total += c;
    }
  }
  for (const auto& [r, d] : surface_t1_dims(n, n + 2)) {
    pc.h2_1 += d.first;
    pc.h3_2 += d.second;
  }
  pc.h1 = pc.coker_total + pc.h2_1;
  pc.h2 = pc.h3_2;

  if (spec.kappa == 0) {
    pc.spot_checks.push_back("H2_(1) x H2_(2) -> H3_(2): mu_p = 0, map is zero");
  } else if (spec.m != 1) {
    pc.spot_checks.push_back("H2_(1) x H2_(2) -> H3_(2): no deformation representatives for m = " +
                             std::to_string(spec.m) + ", not spot-checked");
  } else {
    const SemigroupAlgebra small = surface_algebra(n, n + 2);
    for (int k = 2; k <= n + 1; ++k) {
      if (!zero_product_spot_check(small, spec, k, small.window_basis))
        throw InvariantViolation("zero-product spot-check failed in degree -" + std::to_string(k) + "S2");
      pc.spot_checks.push_back("degree -" + std::to_string(k) +
                               "S2: e3(2)[mu_p, xi_1] = -[mu, xi_p1] on window triples");
    }
  }
  for (int i = 3; i <= 4; ++i)
    pc.higher.push_back("H^" + std::to_string(2 * i - 2) + " and H^" + std::to_string(2 * i - 1) +
                        " involve ker/coker of H^" + std::to_string(2 * i - 1) + "_(" + std::to_string(i) +
                        ") -> H^" + std::to_string(2 * i) + "_(" + std::to_string(i + 1) +
                        ") between spaces of dimension " + std::to_string(n) + " (not computed)");
  return pc;
}

}  // namespace toricdef
