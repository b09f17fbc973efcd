#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toricdef/cochain.hpp"
#include "toricdef/dgla.hpp"
#include "toricdef/poisson_axioms.hpp"
#include "toricdef/surface.hpp"

namespace toricdef {

/// Seeded generator shared by the property suites.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  Rational rational(std::int64_t num = 3, std::int64_t den = 2) {
    return frac(uniform(-num, num), uniform(1, den));
  }
  Rational nonzero_rational(std::int64_t num = 3, std::int64_t den = 2) {
    Rational q;
    do q = rational(num, den);
    while (q == 0);
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

struct SuiteResult {
  std::string name;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::vector<std::string> lines;  // human-readable statistics
  bool ok() const { return failures == 0; }
  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

// ---- finite-dimensional Poisson pairs -------------------------------------

namespace detail {

/// c' (e_i, e_j) = P⁻¹ m(P e_i, P e_j) for a unit upper-triangular P.
inline FiniteBilinear change_basis(const FiniteBilinear& m, const RationalMatrix& p) {
  const int d = m.dim;
  auto col = [&](int i) {
    LinComb<int> v;
    for (int r = 0; r < d; ++r) v.add(r, p[r][i]);
    return v;
  };
  FiniteBilinear out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto v = m(col(i), col(j));
      RationalVector rhs(d, 0);
      for (const auto& [k, c] : v) rhs[k] = c;
      const auto x = solve(p, rhs, static_cast<std::size_t>(d));
      if (!x) throw InvariantViolation("base change matrix is singular");
      for (int k = 0; k < d; ++k) out.at(i, j, k) = (*x)[k];
    }
  return out;
}

inline RationalMatrix random_unitriangular(SuiteRng& rng, int d) {
  RationalMatrix p(d, RationalVector(d, 0));
  for (int i = 0; i < d; ++i) {
    p[i][i] = 1;
    for (int j = i + 1; j < d; ++j) p[i][j] = rng.uniform(-2, 2);
  }
  return p;
}

inline void random_symmetric(SuiteRng& rng, FiniteBilinear& m) {
  for (int i = 0; i < m.dim; ++i)
    for (int j = i; j < m.dim; ++j)
      for (int k = 0; k < m.dim; ++k) m.at(i, j, k) = m.at(j, i, k) = rng.uniform(0, 3) ? Rational(0) : rng.rational();
}

inline void random_skew(SuiteRng& rng, FiniteBilinear& m) {
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j)
      for (int k = 0; k < m.dim; ++k) {
        m.at(i, j, k) = rng.uniform(0, 2) ? Rational(0) : rng.rational();
        m.at(j, i, k) = -m.at(i, j, k);
      }
}

}  // namespace detail

struct FinitePair {
  std::string kind;
  FiniteBilinear mu, mu_p;
};

/// One seeded (μ', μ'_p) pair on a space of dimension ≤ 4. Kinds alternate
/// between genuine Poisson algebras (possibly in a disguised basis) and
/// perturbations that break exactly one axiom family.
inline FinitePair random_finite_pair(SuiteRng& rng) {
  const int kind = static_cast<int>(rng.uniform(0, 6));
  FinitePair out;
  switch (kind) {
    case 0: {  // random tagged maps
      const int d = static_cast<int>(rng.uniform(1, 3));
      out = {"random", FiniteBilinear(d), FiniteBilinear(d)};
      detail::random_symmetric(rng, out.mu);
      detail::random_skew(rng, out.mu_p);
      break;
    }
    case 1:
    case 2: {  // k[x,y]/(x²,y²), {x,y} = c·xy; basis 1, x, y, xy
      out = {kind == 1 ? "truncated-poly" : "truncated-poly-perturbed", FiniteBilinear(4), FiniteBilinear(4)};
      const int mul[4][4] = {{0, 1, 2, 3}, {1, -1, 3, -1}, {2, 3, -1, -1}, {3, -1, -1, -1}};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (mul[i][j] >= 0) out.mu.at(i, j, mul[i][j]) = 1;
      const Rational c = rng.rational();
      out.mu_p.at(1, 2, 3) = c;
      out.mu_p.at(2, 1, 3) = -c;
      if (kind == 2) {
        const int k = static_cast<int>(rng.uniform(0, 3));
        const Rational eps = rng.nonzero_rational();
        out.mu_p.at(1, 3, k) += eps;
        out.mu_p.at(3, 1, k) -= eps;
      }
      const auto p = detail::random_unitriangular(rng, 4);
      out.mu = detail::change_basis(out.mu, p);
      out.mu_p = detail::change_basis(out.mu_p, p);
      break;
    }
    case 3: {  // k^d with idempotent basis, zero bracket
      const int d = static_cast<int>(rng.uniform(1, 4));
      out = {"idempotents", FiniteBilinear(d), FiniteBilinear(d)};
      for (int i = 0; i < d; ++i) out.mu.at(i, i, i) = 1;
      break;
    }
    case 4:
    case 5: {  // zero product with so(3) bracket (Poisson) or a random bracket
      out = {kind == 4 ? "so3" : "random-bracket", FiniteBilinear(3), FiniteBilinear(3)};
      if (kind == 4) {
        const Rational c = rng.nonzero_rational();
        for (int i = 0; i < 3; ++i) {
          const int j = (i + 1) % 3, k = (i + 2) % 3;
          out.mu_p.at(i, j, k) = c;
          out.mu_p.at(j, i, k) = -c;
        }
      } else {
        detail::random_skew(rng, out.mu_p);
      }
      break;
    }
    default: {  // k[x]/(x^d) with a random skew bracket
      const int d = static_cast<int>(rng.uniform(2, 4));
      out = {"truncated-line", FiniteBilinear(d), FiniteBilinear(d)};
      for (int i = 0; i < d; ++i)
        for (int j = 0; i + j < d; ++j) out.mu.at(i, j, i + j) = 1;
      detail::random_skew(rng, out.mu_p);
      break;
    }
  }
  return out;
}

inline SuiteResult poisson_axioms_suite(std::uint64_t seed, int trials = 200) {
  SuiteRng rng(seed);
  SuiteResult res{"poisson-axioms", trials, 0, {}};
  int poisson = 0, identities = 0;
  for (int t = 0; t < trials; ++t) {
    const auto pair = random_finite_pair(rng);
    const auto r = poisson_axiom_equivalence(pair.mu, pair.mu_p);
    poisson += r.axioms();
    identities += r.f_cyclic_identity && r.f_three_term_identity;
    if (!r.agree()) {
      ++res.failures;
      res.lines.push_back("trial " + std::to_string(t) + " (" + pair.kind + "): axioms and MC residuals disagree");
    }
  }
  res.lines.push_back("pairs satisfying all axioms: " + std::to_string(poisson) + "/" + std::to_string(trials));
  res.lines.push_back("F identities verified pointwise: " + std::to_string(identities) + "/" + std::to_string(trials));
  return res;
}

// ---- Lemma on e_3 projections of brackets ---------------------------------

namespace detail {

/// Coefficient Σ c_I Π λ-coordinates over monomials of degree ≤ 2 in the four
/// coordinates λ1_x, λ1_y, λ2_x, λ2_y (not multi-additive, so the resulting
/// cochain is in general no cocycle).
inline Coefficient random_quadratic(SuiteRng& rng) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> idx;
    const int deg = static_cast<int>(rng.uniform(0, 2));
    for (int k = 0; k < deg; ++k) idx.push_back(static_cast<int>(rng.uniform(0, 3)));
    terms.emplace_back(idx, rng.nonzero_rational());
  }
  return [terms](const std::vector<Vec>& a) -> Rational {
    const std::int64_t coord[4] = {a[0][0], a[0][1], a[1][0], a[1][1]};
    Rational out = 0;
    for (const auto& [idx, c] : terms) {
      Rational v = c;
      for (int i : idx) v *= coord[i];
      out += v;
    }
    return out;
  };
}

inline Vec random_shift(SuiteRng& rng) {
  static const std::vector<Vec> shifts{{0, 0, 0}, {1, 1, 0}, {-1, -1, 0}, {0, 1, 0}};
  return shifts[static_cast<std::size_t>(rng.uniform(0, 3))];
}

inline SCochain random_skew_cochain(SuiteRng& rng, const SemigroupAlgebra& alg) {
  return hodge_project(monomial_cochain(alg, 2, random_shift(rng), random_quadratic(rng)), 2);
}

inline SCochain random_sym_cochain(SuiteRng& rng, const SemigroupAlgebra& alg) {
  return hodge_project(monomial_cochain(alg, 2, random_shift(rng), random_quadratic(rng)), 1);
}

/// Skew Hochschild 2-cocycle: Σ κ det(λ1,λ2) x^{λ1+λ2−mS2} over m ∈ {−1,0,1}.
inline SCochain random_skew_cocycle(SuiteRng& rng, const SemigroupAlgebra& alg) {
  std::vector<std::pair<Rational, SCochain>> terms;
  for (std::int64_t m = -1; m <= 1; ++m)
    if (rng.uniform(0, 1)) terms.emplace_back(rng.nonzero_rational(), bracket_cochain(alg, {Rational(1), m, "det"}));
  if (terms.empty()) terms.emplace_back(1, pi_g(alg));
  return linear_combination<Vec>(terms, 2);
}

/// Symmetric Hochschild 2-cocycle: dθ for a random linear θ plus a multiple of
/// the first-order deformation ξ_1.
inline SCochain random_sym_cocycle(SuiteRng& rng, const SemigroupAlgebra& alg) {
  const auto theta = monomial_cochain(alg, 1, random_shift(rng), [c = rng.rational(), e = rng.rational()](
                                                                      const std::vector<Vec>& a) -> Rational {
    return c * a[0][0] + e * a[0][1] * a[0][1];
  });
  const int n = alg.surface->n;
  const SurfaceDeformation def(n, static_cast<int>(rng.uniform(2, n + 1)), 1);
  return linear_combination<Vec>(
      {{1, hochschild_d(theta, product_cochain(alg))}, {rng.rational(), def.xi(alg, 1)}}, 2);
}

/// Jacobiator J(a,b,c) = p(p(a,b),c) + p(p(b,c),a) + p(p(c,a),b).
inline SCochain jacobiator(const SCochain& p) {
  return rule_cochain<Vec>(3, [p](const std::vector<Vec>& a) {
    AlgebraElement out;
    for (int r = 0; r < 3; ++r) {
      const Vec &x = a[r], &y = a[(r + 1) % 3], &z = a[(r + 2) % 3];
      out.add(p.apply({p({x, y}), AlgebraElement(z)}));
    }
    return out;
  });
}

}  // namespace detail

struct LemmaClause {
  std::string name;
  std::string level;  // "cochain", "cocycle" or "fails"
  std::int64_t trials = 0;
  std::int64_t cochain_failures = 0;
  std::int64_t cocycle_failures = 0;
  friend bool operator==(const LemmaClause&, const LemmaClause&) = default;
};

struct PalLemmaReport {
  std::vector<LemmaClause> clauses;
  bool pi_g_jacobi = false;        // e_3(3)[π_g,π_g] = 0
  bool violation_detected = false;  // seeded non-Jacobi p has e_3(3)[p,p] ≠ 0
  std::int64_t jacobi_trials_satisfying = 0;
};

inline PalLemmaReport pal_lemma_suite(std::uint64_t seed, int trials = 100, int n = 1, std::int64_t window = 4) {
  const auto alg = surface_algebra(n, window);
  const auto& basis = alg.window_basis;
  SuiteRng rng(seed);
  PalLemmaReport rep;
  auto zero3 = zero_cochain<Vec>(3);

  // Each clause: predicate on (skew p, symmetric q).
  using Pred = std::function<bool(const SCochain&, const SCochain&)>;
  const std::vector<std::pair<std::string, Pred>> clauses{
      {"e3(2)[p,p] = 0",
       [&](const SCochain& p, const SCochain&) {
         return !first_difference(hodge_project(gerstenhaber_bracket(p, p), 2), zero3, basis);
       }},
      {"e3(3)[p,p] = 0 <=> Jacobi",
       [&](const SCochain& p, const SCochain&) {
         const bool e3 = !first_difference(hodge_project(gerstenhaber_bracket(p, p), 3), zero3, basis);
         const bool jac = !first_difference(detail::jacobiator(p), zero3, basis);
         rep.jacobi_trials_satisfying += jac;
         return e3 == jac;
       }},
      {"[q,q] = e3(1)[q,q]",
       [&](const SCochain&, const SCochain& q) {
         const auto b = gerstenhaber_bracket(q, q);
         return !first_difference(b, hodge_project(b, 1), basis);
       }},
      {"[p,q] = e3(2)[p,q]",
       [&](const SCochain& p, const SCochain& q) {
         const auto b = gerstenhaber_bracket(p, q);
         return !first_difference(b, hodge_project(b, 2), basis);
       }},
  };
  for (const auto& [name, pred] : clauses) {
    LemmaClause c{name, "cochain", trials, 0, 0};
    for (int t = 0; t < trials; ++t)
      if (!pred(detail::random_skew_cochain(rng, alg), detail::random_sym_cochain(rng, alg))) ++c.cochain_failures;
    if (c.cochain_failures) {
      c.level = "cocycle";
      for (int t = 0; t < trials; ++t)
        if (!pred(detail::random_skew_cocycle(rng, alg), detail::random_sym_cocycle(rng, alg))) ++c.cocycle_failures;
      if (c.cocycle_failures) c.level = "fails";
    }
    rep.clauses.push_back(c);
  }
  const auto pi = pi_g(alg);
  rep.pi_g_jacobi = !first_difference(hodge_project(gerstenhaber_bracket(pi, pi), 3), zero3, basis);
  const auto bad = monomial_cochain(alg, 2, alg.surface->S2, [](const std::vector<Vec>& a) -> Rational {
    return Rational(det2(a[0], a[1]) * (a[0][0] + a[1][0]));
  });
  rep.violation_detected = first_difference(hodge_project(gerstenhaber_bracket(bad, bad), 3), zero3, basis) &&
                           first_difference(detail::jacobiator(bad), zero3, basis);
  return rep;
}

// ---- Hodge idempotents on sparse table cochains -----------------------------

inline SuiteResult hodge_suite(std::uint64_t seed, int trials = 200, int n = 1, std::int64_t window = 6) {
  const auto alg = surface_algebra(n, window);
  const auto& basis = alg.window_basis;
  const std::set<Vec> in_window(basis.begin(), basis.end());
  SuiteRng rng(seed);
  SuiteResult res{"hodge", trials, 0, {}};
  auto pick = [&] { return basis[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(basis.size()) - 1))]; };
  auto fail = [&](int t, const std::string& what) {
    ++res.failures;
    res.lines.push_back("trial " + std::to_string(t) + ": " + what);
  };
  for (int t = 0; t < trials; ++t) {
    const int arity = static_cast<int>(rng.uniform(2, 4));
    std::map<std::vector<Vec>, AlgebraElement> table;
    const int support = static_cast<int>(rng.uniform(1, 4));
    for (int s = 0; s < support; ++s) {
      std::vector<Vec> tup;
      for (int k = 0; k < arity; ++k) tup.push_back(pick());
      table[tup].add(pick(), rng.nonzero_rational());
    }
    const auto f = table_cochain<Vec>(arity, table, [in_window](const std::vector<Vec>& a) {
      return std::all_of(a.begin(), a.end(), [&](const Vec& v) { return in_window.count(v) > 0; });
    });
    // Check tuples: every permutation of every support tuple plus a few random ones.
    std::set<std::vector<Vec>> checks;
    for (const auto& [tup, v] : table) {
      auto sorted = tup;
      std::sort(sorted.begin(), sorted.end());
      do checks.insert(sorted);
      while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    for (int r = 0; r < 5; ++r) {
      std::vector<Vec> tup;
      for (int k = 0; k < arity; ++k) tup.push_back(pick());
      checks.insert(tup);
    }
    auto equal = [&](const SCochain& a, const SCochain& b) {
      return std::all_of(checks.begin(), checks.end(), [&](const auto& tup) { return a(tup) == b(tup); });
    };
    std::vector<SCochain> parts;
    for (int i = 1; i <= arity; ++i) parts.push_back(hodge_project(f, i));
    std::vector<std::pair<Rational, SCochain>> sum;
    for (const auto& e : parts) sum.emplace_back(1, e);
    if (!equal(linear_combination<Vec>(sum, arity), f)) fail(t, "sum of idempotents is not the identity");
    for (int i = 1; i <= arity; ++i)
      for (int j = 1; j <= arity; ++j) {
        const auto ee = hodge_project(parts[i - 1], j);
        if (!equal(ee, i == j ? parts[i - 1] : zero_cochain<Vec>(arity)))
          fail(t, "e(" + std::to_string(j) + ")e(" + std::to_string(i) + ") is wrong");
      }
  }
  // Shuffle relations in arity 2: symmetric maps are killed by s_2, skew ones doubled.
  const auto s2 = total_shuffle(2);
  const auto mu = product_cochain(alg), p = pi_g(alg);
  if (first_difference(shuffle_apply(mu, s2), zero_cochain<Vec>(2), basis)) fail(-1, "mu s_2 != 0");
  if (first_difference(shuffle_apply(p, s2), Rational(2) * p, basis)) fail(-1, "p s_2 != 2p");
  res.lines.push_back("idempotent checks on " + std::to_string(trials) + " sparse cochains of arity 2-4");
  return res;
}

// ---- gauge action -------------------------------------------------------------

/// Gauge transforms of the surface element x = Σ t^j (ξ_j, ξ_{p,j}) over k[t]/t^ν
/// stay Maurer–Cartan and agree with conjugation by exp(α).
inline SuiteResult gauge_suite(std::uint64_t seed, int trials = 50, ArtinCoefficients b = {1, 3}) {
  if (b.variables != 1 || b.nu < 2 || b.nu > 4)
    throw InputError("gauge suite runs over k[t]/t^nu with 2 <= nu <= 4, got " + b.to_string());
  const int order = b.nu - 1;
  const auto alg = surface_algebra(1, 4), small = surface_algebra(1, 2);
  const PoissonDgla<Vec> g(product_cochain(alg), pi_g(alg), b, alg.window_basis);
  const PoissonDgla<Vec> gs(product_cochain(alg), pi_g(alg), b, small.window_basis);
  const SurfaceDeformation def(1, 2, order);
  Series<Vec> x(2);
  for (int j = 1; j <= order; ++j) x.add_term({j}, TotalCochain<Vec>(2, {def.xi(alg, j), def.xi_p(alg, j)}));
  SuiteRng rng(seed);
  SuiteResult res{"gauge", trials, 0, {}};
  if (!gs.mc_check(x).holds) {
    ++res.failures;
    res.lines.push_back("surface element is not Maurer-Cartan");
  }
  for (int t = 0; t < trials; ++t) {
    Series<Vec> alpha(1);
    for (int j = 1; j <= order; ++j) {
      const auto c0 = rng.rational(), c1 = rng.rational(), c2 = rng.rational();
      alpha.add_term({j}, TotalCochain<Vec>(1, {monomial_cochain(alg, 1, detail::random_shift(rng),
                                                                  [c0, c1, c2](const std::vector<Vec>& a) -> Rational {
                                                                    return c0 + c1 * a[0][0] + c2 * a[0][1];
                                                                  })}));
    }
    const auto y = g.gauge_act(alpha, x);
    const auto mc = gs.mc_check(y);
    if (!mc.holds) {
      ++res.failures;
      res.lines.push_back("trial " + std::to_string(t) + ": gauge image not MC at " + mc.witness);
    } else if (first_nonzero(series_add(y, g.conjugate(alpha, x), Rational(-1)), alg.window_basis)) {
      ++res.failures;
      res.lines.push_back("trial " + std::to_string(t) + ": gauge formula differs from conjugation");
    }
  }
  res.lines.push_back("gauge transforms checked: " + std::to_string(trials));
  return res;
}

}  // namespace toricdef
