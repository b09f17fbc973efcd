#pragma once

#include <string>
#include <vector>

#include "toricdef/cochain.hpp"
#include "toricdef/dgla.hpp"
#include "toricdef/errors.hpp"

namespace toricdef {

/// Bilinear map on k^dim by structure constants: m(e_i, e_j) = Σ_k c[i][j][k] e_k.
struct FiniteBilinear {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> c;

  explicit FiniteBilinear(int d = 0)
      : dim(d), c(static_cast<std::size_t>(d),
                  std::vector<std::vector<Rational>>(static_cast<std::size_t>(d),
                                                     std::vector<Rational>(static_cast<std::size_t>(d), 0))) {}

  Rational& at(int i, int j, int k) { return c[i][j][k]; }
  const Rational& at(int i, int j, int k) const { return c[i][j][k]; }

  LinComb<int> operator()(int i, int j) const {
    LinComb<int> out;
    for (int k = 0; k < dim; ++k) out.add(k, c[i][j][k]);
    return out;
  }

  /// Bilinear extension.
  LinComb<int> operator()(const LinComb<int>& a, const LinComb<int>& b) const {
    LinComb<int> out;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) out.add((*this)(i, j), x * y);
    return out;
  }

  bool symmetric() const {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (c[i][j] != c[j][i]) return false;
    return true;
  }

  bool skew() const {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          if (c[i][j][k] != -c[j][i][k]) return false;
    return true;
  }

  Cochain<int> cochain() const {
    const FiniteBilinear self = *this;
    return rule_cochain<int>(2, [self](const std::vector<int>& a) { return self(a[0], a[1]); });
  }
};

inline std::vector<int> index_basis(int dim) {
  std::vector<int> b(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) b[i] = i;
  return b;
}

struct AxiomReport {
  bool commutative = false, associative = false, jacobi = false, leibniz = false;
  bool assoc_residual_zero = false;    // ½[μ',μ'] (weight 1 of ½[x,x]_p)
  bool leibniz_residual_zero = false;  // weight 2: e_3(2)[μ',μ'_p]
  bool jacobi_residual_zero = false;   // weight 3: ½e_3(3)[μ'_p,μ'_p]
  bool raw_mixed_zero = false;         // [μ',μ'_p] before projection
  bool f_cyclic_identity = false;      // F + F∘cyc = −[μ_p,μ]
  bool f_three_term_identity = false;  // −2F = [μ_p,μ](a,b,c) + [μ_p,μ](a,c,b) − [μ_p,μ](b,a,c)

  bool axioms() const { return commutative && associative && jacobi && leibniz; }
  bool residuals() const { return assoc_residual_zero && leibniz_residual_zero && jacobi_residual_zero; }
  bool agree() const { return axioms() == residuals() && f_cyclic_identity && f_three_term_identity; }
};

/// Axioms are checked from the structure constants directly; residuals come
/// from the Maurer–Cartan expression ½[x,x]_p for x = (μ', μ'_p) in the dgla
/// of the zero structure on k^dim.
inline AxiomReport poisson_axiom_equivalence(const FiniteBilinear& mu, const FiniteBilinear& mu_p) {
  if (mu.dim != mu_p.dim) throw InputError("bilinear maps on spaces of different dimension");
  if (!mu.symmetric()) throw InputError("mu' must carry the symmetric tag");
  if (!mu_p.skew()) throw InputError("mu'_p must carry the skew tag");
  const int d = mu.dim;
  auto e = [](int i) { return LinComb<int>(i, Rational(1)); };
  AxiomReport r;
  r.commutative = true;
  r.associative = r.jacobi = r.leibniz = true;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        if (mu(mu(e(a), e(b)), e(c)) != mu(e(a), mu(e(b), e(c)))) r.associative = false;
        LinComb<int> jac = mu_p(mu_p(e(a), e(b)), e(c));
        jac.add(mu_p(mu_p(e(b), e(c)), e(a)));
        jac.add(mu_p(mu_p(e(c), e(a)), e(b)));
        if (!jac.empty()) r.jacobi = false;
        LinComb<int> f = mu_p(e(a), mu(e(b), e(c)));
        f.add(mu(mu_p(e(a), e(b)), e(c)), -1);
        f.add(mu(e(b), mu_p(e(a), e(c))), -1);
        if (!f.empty()) r.leibniz = false;
      }

  const auto basis = index_basis(d);
  const auto m = mu.cochain(), p = mu_p.cochain();
  const TotalCochain<int> x(2, {m, p});
  const auto half = scale(Rational(1, 2), p_bracket(x, x));
  r.assoc_residual_zero = !first_difference(*half.component(1), zero_cochain<int>(3), basis);
  r.leibniz_residual_zero = !first_difference(*half.component(2), zero_cochain<int>(3), basis);
  r.jacobi_residual_zero = !first_difference(*half.component(3), zero_cochain<int>(3), basis);
  const auto pm = gerstenhaber_bracket(p, m);
  r.raw_mixed_zero = vanishes_on(gerstenhaber_bracket(m, p), basis);

  // F(a,b,c) = {a,bc} − {a,b}c − b{a,c}.
  auto F = [&](int a, int b, int c) {
    LinComb<int> f = mu_p(e(a), mu(e(b), e(c)));
    f.add(mu(mu_p(e(a), e(b)), e(c)), -1);
    f.add(mu(e(b), mu_p(e(a), e(c))), -1);
    return f;
  };
  r.f_cyclic_identity = r.f_three_term_identity = true;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        LinComb<int> lhs = F(a, b, c);
        lhs.add(F(c, a, b));
        if (lhs != pm({a, b, c}).scaled(-1)) r.f_cyclic_identity = false;
        LinComb<int> rhs = pm({a, b, c});
        rhs.add(pm({a, c, b}));
        rhs.add(pm({b, a, c}), -1);
        if (F(a, b, c).scaled(-2) != rhs) r.f_three_term_identity = false;
      }
  return r;
}

}  // namespace toricdef
