#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/artin.hpp"
#include "toricdef/cochain.hpp"
#include "toricdef/errors.hpp"
#include "toricdef/linalg.hpp"

namespace toricdef {

/// Element of D^m = ⊕_{j=1}^m C^m_(j); comps[j−1] is the weight-j part and
/// nullopt stands for a component known to be zero.
template <class K>
struct TotalCochain {
  int degree = 0;
  std::vector<std::optional<Cochain<K>>> comps;

  TotalCochain() = default;
  explicit TotalCochain(int m) : degree(m), comps(static_cast<std::size_t>(m)) {}
  TotalCochain(int m, std::vector<std::optional<Cochain<K>>> c) : degree(m), comps(std::move(c)) {
    if (static_cast<int>(comps.size()) != m) throw ContractError("total cochain needs one slot per weight");
    for (const auto& f : comps)
      if (f && f->arity() != m) throw ContractError("component arity differs from total degree");
  }

  const std::optional<Cochain<K>>& component(int w) const { return comps.at(static_cast<std::size_t>(w - 1)); }
  std::optional<Cochain<K>>& component(int w) { return comps.at(static_cast<std::size_t>(w - 1)); }

  bool structurally_zero() const {
    for (const auto& f : comps)
      if (f) return false;
    return true;
  }
};

template <class K>
TotalCochain<K> add(const TotalCochain<K>& a, const TotalCochain<K>& b, const Rational& scale = 1) {
  if (a.degree != b.degree) throw ContractError("adding total cochains of different degree");
  TotalCochain<K> out(a.degree);
  for (int w = 1; w <= a.degree; ++w) {
    const auto &f = a.component(w), &g = b.component(w);
    if (f && g && scale != 0) out.component(w) = linear_combination<K>({{1, *f}, {scale, *g}}, a.degree);
    else if (f) out.component(w) = f;
    else if (g && scale != 0) out.component(w) = scale * *g;
  }
  return out;
}

template <class K>
TotalCochain<K> scale(const Rational& c, const TotalCochain<K>& a) {
  TotalCochain<K> out(a.degree);
  if (c == 0) return out;
  for (int w = 1; w <= a.degree; ++w)
    if (a.component(w)) out.component(w) = c * *a.component(w);
  return out;
}

/// [F,G]_p: weight-w part Σ_{i+j−1=w} e_{m+n−1}(w)[f_i, g_j].
template <class K>
TotalCochain<K> p_bracket(const TotalCochain<K>& f, const TotalCochain<K>& g,
                          int arity_cap = kDefaultArityCap) {
  const int deg = f.degree + g.degree - 1;
  if (deg > arity_cap)
    throw ResourceError("[,]_p in total degree " + std::to_string(deg) + " exceeds the arity cap " +
                        std::to_string(arity_cap));
  TotalCochain<K> out(deg);
  for (int w = 1; w <= deg; ++w) {
    std::vector<std::pair<Rational, Cochain<K>>> terms;
    for (int i = 1; i <= f.degree; ++i) {
      const int j = w + 1 - i;
      if (j < 1 || j > g.degree || !f.component(i) || !g.component(j)) continue;
      terms.emplace_back(1, gerstenhaber_bracket(*f.component(i), *g.component(j)));
    }
    if (terms.empty()) continue;
    out.component(w) = hodge_project(linear_combination<K>(terms, deg), w, arity_cap);
  }
  return out;
}

/// First (weight, tuple) where the total cochain is nonzero on basis tuples.
template <class K>
std::optional<std::pair<int, std::vector<K>>> first_nonzero(const TotalCochain<K>& f,
                                                            const std::vector<K>& basis) {
  for (int w = 1; w <= f.degree; ++w) {
    if (!f.component(w)) continue;
    if (auto t = first_difference(*f.component(w), zero_cochain<K>(f.degree), basis)) return std::make_pair(w, *t);
  }
  return std::nullopt;
}

// ---- series over Artin coefficients -----------------------------------------

/// Σ t^a x_a with x_a ∈ D^m; absent monomials are zero.
template <class K>
struct Series {
  int degree = 0;
  std::map<TMono, TotalCochain<K>> terms;

  Series() = default;
  explicit Series(int m) : degree(m) {}

  void add_term(const TMono& a, const TotalCochain<K>& x, const Rational& c = 1) {
    if (x.degree != degree) throw ContractError("series term has the wrong total degree");
    auto it = terms.find(a);
    if (it == terms.end()) terms.emplace(a, scale(c, x));
    else it->second = add(it->second, x, c);
  }
  const TotalCochain<K>* at(const TMono& a) const {
    auto it = terms.find(a);
    return it == terms.end() ? nullptr : &it->second;
  }
};

template <class K>
Series<K> series_add(const Series<K>& a, const Series<K>& b, const Rational& c = 1) {
  Series<K> out = a;
  for (const auto& [m, x] : b.terms) out.add_term(m, x, c);
  return out;
}

template <class K>
Series<K> series_scale(const Rational& c, const Series<K>& a) {
  Series<K> out(a.degree);
  for (const auto& [m, x] : a.terms) out.add_term(m, x, c);
  return out;
}

/// [x, y]_p over B, truncated at m^ν.
template <class K>
Series<K> series_bracket(const ArtinCoefficients& b, const Series<K>& x, const Series<K>& y,
                         int arity_cap = kDefaultArityCap) {
  Series<K> out(x.degree + y.degree - 1);
  for (const auto& [ma, fa] : x.terms)
    for (const auto& [mb, gb] : y.terms) {
      const TMono m = ArtinCoefficients::add(ma, mb);
      if (!b.survives(m)) continue;
      out.add_term(m, p_bracket(fa, gb, arity_cap));
    }
  return out;
}

template <class K>
std::optional<std::pair<TMono, std::pair<int, std::vector<K>>>> first_nonzero(const Series<K>& s,
                                                                             const std::vector<K>& basis) {
  for (const auto& [m, x] : s.terms)
    if (auto w = first_nonzero(x, basis)) return std::make_pair(m, *w);
  return std::nullopt;
}

// ---- the dgla C_p(A)[1] ----------------------------------------------------

template <class K>
struct McResult {
  bool holds = true;
  Series<K> residual{3};  // d̃x + ½[x,x]_p
  std::string witness;    // first nonzero evaluation, if any
};

template <class K>
struct ExtendResult {
  bool extended = false;
  Series<K> x{2};
  std::optional<TMono> obstructed_at;
  Series<K> obstruction{3};
  std::optional<bool> obstruction_closed;  // set when checked
};

/// Linear maps A → A as a truncated power series (constant term included).
template <class K>
using LinearSeries = std::map<TMono, Cochain<K>>;

/// The dgla g = D[1] of a Poisson algebra (A, μ, μ_p) over Artin coefficients B,
/// with d̃ = [μ + μ_p, ·]_p. Equalities are decided by evaluation on tuples of
/// `basis`.
template <class K>
class PoissonDgla {
 public:
  PoissonDgla(Cochain<K> mu, Cochain<K> mu_p, ArtinCoefficients b, std::vector<K> basis,
              int arity_cap = kDefaultArityCap)
      : mu_(std::move(mu)), mu_p_(std::move(mu_p)), b_(b), basis_(std::move(basis)), cap_(arity_cap),
        mu_hat_(2, {mu_, mu_p_}) {
    const auto swap = GroupElement(Perm{1, 0}, Rational(1));
    if (first_difference(mu_p_, Rational(-1) * shuffle_apply(mu_p_, swap), basis_))
      throw InvalidStructure("mu_p is not skew-symmetric");
    if (auto t = first_difference(hochschild_d(mu_p_, mu_), zero_cochain<K>(3), basis_))
      throw InvalidStructure("mu_p is not a biderivation (d mu_p != 0)");
    if (first_difference(hodge_project(gerstenhaber_bracket(mu_p_, mu_p_), 3, cap_), zero_cochain<K>(3), basis_))
      throw InvalidStructure("mu_p fails the Jacobi identity (e3(3)[mu_p,mu_p] != 0)");
  }

  const ArtinCoefficients& coefficients() const { return b_; }
  const std::vector<K>& basis() const { return basis_; }
  const TotalCochain<K>& mu_hat() const { return mu_hat_; }
  const Cochain<K>& mu() const { return mu_; }
  const Cochain<K>& mu_p() const { return mu_p_; }

  TotalCochain<K> tilde_d(const TotalCochain<K>& f) const { return p_bracket(mu_hat_, f, cap_); }

  Series<K> tilde_d(const Series<K>& x) const {
    Series<K> out(x.degree + 1);
    for (const auto& [m, f] : x.terms) out.add_term(m, tilde_d(f));
    return out;
  }

  Series<K> bracket(const Series<K>& x, const Series<K>& y) const { return series_bracket(b_, x, y, cap_); }

  Series<K> mc_residual(const Series<K>& x) const {
    return series_add(tilde_d(x), bracket(x, x), Rational(1, 2));
  }

  McResult<K> mc_check(const Series<K>& x) const {
    McResult<K> r;
    r.residual = mc_residual(x);
    if (auto w = first_nonzero(r.residual, basis_)) {
      r.holds = false;
      r.witness = "coefficient of " + ArtinCoefficients::monomial_string(w->first) + ", weight " +
                  std::to_string(w->second.first);
    }
    return r;
  }

  /// x ↦ x + Σ_{n≥0} ad_α^n([α,x] − d̃α)/(n+1)!, summed until m^ν kills it.
  Series<K> gauge_act(const Series<K>& alpha, const Series<K>& x) const {
    if (alpha.degree != 1 || x.degree != 2) throw ContractError("gauge_act needs alpha in g^0 and x in g^1");
    for (const auto& [m, f] : alpha.terms)
      if (ArtinCoefficients::total(m) == 0) throw ContractError("alpha must lie in the maximal ideal");
    Series<K> term = series_add(bracket(alpha, x), tilde_d(alpha), Rational(-1));
    Series<K> out = x;
    Rational fact = 1;
    for (int n = 0; !term.terms.empty(); ++n) {
      fact *= n + 1;
      out = series_add(out, term, 1 / fact);
      term = bracket(alpha, term);
    }
    return out;
  }

  /// BCH(X, Y) = log(e^X e^Y) through bracket length 4 (enough for ν ≤ 5).
  Series<K> bch(const Series<K>& x, const Series<K>& y) const {
    if (b_.nu > 5) throw ResourceError("BCH is implemented through order 4 (nu <= 5)");
    const Series<K> xy = bracket(x, y);
    Series<K> out = series_add(series_add(x, y), xy, Rational(1, 2));
    out = series_add(out, bracket(x, xy), Rational(1, 12));
    out = series_add(out, bracket(y, bracket(y, x)), Rational(1, 12));
    out = series_add(out, bracket(y, bracket(x, xy)), Rational(-1, 24));
    return out;
  }

  /// exp(α) as a series of linear maps.
  LinearSeries<K> exp_series(const Series<K>& alpha, const Rational& sign = 1) const {
    LinearSeries<K> out, power;
    const auto id = rule_cochain<K>(1, [](const std::vector<K>& a) { return LinComb<K>(a[0], Rational(1)); });
    out.emplace(b_.one(), id);
    power.emplace(b_.one(), id);
    Rational fact = 1;
    for (int k = 1; k < b_.nu; ++k) {
      fact *= k;
      LinearSeries<K> next;
      for (const auto& [ma, f] : alpha.terms)
        for (const auto& [mb, g] : power) {
          const TMono m = ArtinCoefficients::add(ma, mb);
          if (!b_.survives(m) || !f.component(1)) continue;
          const auto c = sign * circle(*f.component(1), g);
          auto it = next.find(m);
          if (it == next.end()) next.emplace(m, c);
          else it->second = it->second + c;
        }
      power = next;
      for (const auto& [m, g] : power) {
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, (1 / fact) * g);
        else it->second = it->second + (1 / fact) * g;
      }
    }
    return out;
  }

  /// The structure maps conjugated by exp(α): f'(a,b) = e^α f(e^{−α}a, e^{−α}b)
  /// for f = μ + x_(1) and f = μ_p + x_(2); returned minus (μ, μ_p), i.e.
  /// as a deformation element.
  Series<K> conjugate(const Series<K>& alpha, const Series<K>& x) const {
    const auto e = exp_series(alpha), einv = exp_series(alpha, Rational(-1));
    Series<K> out(2);
    for (int w = 1; w <= 2; ++w) {
      LinearSeries<K> f;  // arity-2 series including the constant term
      f.emplace(b_.one(), w == 1 ? mu_ : mu_p_);
      for (const auto& [m, t] : x.terms)
        if (t.component(w)) f.emplace(m, *t.component(w));
      for (const auto& m : b_.monomials()) {
        const ArtinCoefficients b = b_;
        auto rule = [b, m, e, einv, f](const std::vector<K>& args) {
          LinComb<K> acc;
          for (const auto& [mc, g1] : einv)
            for (const auto& [md, g2] : einv) {
              const TMono cd = ArtinCoefficients::add(mc, md);
              if (!b.survives(cd)) continue;
              const auto u = g1({args[0]}), v = g2({args[1]});
              for (const auto& [mb, fb] : f) {
                const TMono bcd = ArtinCoefficients::add(mb, cd);
                if (!b.survives(bcd)) continue;
                const auto uv = fb.apply({u, v});
                for (const auto& [ma, ea] : e)
                  if (ArtinCoefficients::add(ma, bcd) == m) acc.add(ea.apply({uv}));
              }
            }
          return acc;
        };
        TotalCochain<K> t(2);
        t.component(w) = rule_cochain<K>(2, rule);
        out.add_term(m, t);
      }
    }
    return out;
  }

  /// Next-order solve: for every monomial a of total degree `order`, looks for
  /// x_a in the span of `ansatz` with d̃x_a = −Σ_{b+c=a} ½[x_b,x_c]_p on basis
  /// triples. Stops at the first monomial without a solution and returns its
  /// residual as the obstruction.
  ExtendResult<K> mc_extend(const Series<K>& x, int order, const std::vector<TotalCochain<K>>& ansatz,
                            const std::vector<K>* closed_basis = nullptr) const {
    ExtendResult<K> res;
    res.x = x;
    if (order >= b_.nu) {
      res.extended = true;
      return res;
    }
    const Series<K> rhs_all = series_scale(Rational(1, 2), bracket(x, x));
    std::vector<TotalCochain<K>> dans;
    for (const auto& a : ansatz) dans.push_back(tilde_d(a));
    for (const auto& m : b_.monomials()) {
      if (ArtinCoefficients::total(m) != order) continue;
      const TotalCochain<K>* r = rhs_all.at(m);
      if (!r) continue;
      // Rows: (weight, tuple, output key).
      std::map<std::tuple<int, std::vector<K>, K>, std::size_t> row_of;
      std::vector<std::map<std::size_t, Rational>> cols(ansatz.size());
      std::map<std::size_t, Rational> target;
      auto collect = [&](const TotalCochain<K>& f, auto&& put) {
        for (int w = 1; w <= 3; ++w) {
          if (!f.component(w)) continue;
          for_each_tuple(basis_, 3, [&](const std::vector<K>& t) {
            for (const auto& [k, c] : (*f.component(w))(t)) {
              auto [it, ins] = row_of.try_emplace({w, t, k}, row_of.size());
              put(it->second, c);
            }
          });
        }
      };
      for (std::size_t i = 0; i < ansatz.size(); ++i)
        collect(dans[i], [&](std::size_t row, const Rational& c) { cols[i][row] += c; });
      collect(*r, [&](std::size_t row, const Rational& c) { target[row] -= c; });
      RationalMatrix mat(row_of.size(), RationalVector(ansatz.size(), Rational(0)));
      RationalVector rhs(row_of.size(), Rational(0));
      for (std::size_t i = 0; i < ansatz.size(); ++i)
        for (const auto& [row, c] : cols[i]) mat[row][i] = c;
      for (const auto& [row, c] : target) rhs[row] = c;
      const auto sol = row_of.empty() ? std::optional<RationalVector>(RationalVector(ansatz.size(), 0))
                                      : solve(mat, rhs, ansatz.size());
      if (!sol) {
        res.obstructed_at = m;
        res.obstruction.add_term(m, *r);
        if (closed_basis) res.obstruction_closed = !first_nonzero(tilde_d(res.obstruction), *closed_basis);
        return res;
      }
      TotalCochain<K> xa(2);
      for (std::size_t i = 0; i < ansatz.size(); ++i)
        if ((*sol)[i] != 0) xa = add(xa, ansatz[i], (*sol)[i]);
      if (!xa.structurally_zero()) res.x.add_term(m, xa);
    }
    res.extended = true;
    return res;
  }

 private:
  Cochain<K> mu_, mu_p_;
  ArtinCoefficients b_;
  std::vector<K> basis_;
  int cap_;
  TotalCochain<K> mu_hat_;
};

}  // namespace toricdef
