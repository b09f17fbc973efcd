#pragma once

#include <array>
#include <map>
#include <vector>

#include "toricdef/cochain.hpp"
#include "toricdef/errors.hpp"
#include "toricdef/semigroup.hpp"

namespace toricdef {

/// The one-parameter deformation g_t = xy − z^{n+1} − t z^{n+1−k} of the A_n
/// surface, with X = x^{S1}, Y = x^{S3}, Z = x^{S2}. Products and Jacobian
/// brackets are computed in k[X,Y,Z,t] and reduced with
/// XY = Z^{n+1} + t Z^{n+1−k}; t has lattice degree kS2.
class SurfaceDeformation {
 public:
  using Mono = std::array<std::int64_t, 4>;  // exponents of X, Y, Z, t
  using Poly = std::map<Mono, Rational>;

  SurfaceDeformation(int n, int k, int max_t_degree)
      : n_(n), k_(k), tmax_(max_t_degree) {
    if (n < 1) throw InputError("n must be positive");
    if (k < 2 || k > n + 1) throw InputError("deformation degree k must lie in 2..n+1");
  }

  int n() const { return n_; }
  int k() const { return k_; }

  Poly monomial(const Vec& lambda) const {
    const auto nf = surface_normal_form(n_, lambda);
    return Poly{{Mono{nf.x, nf.y, nf.z, 0}, Rational(1)}};
  }

  Poly product(const Vec& a, const Vec& b) const { return reduce(mul(monomial(a), monomial(b))); }

  /// Jacobian bracket of g_t: {X,Y} = ∂_Z g_t, {Y,Z} = ∂_X g_t = Y, {Z,X} = ∂_Y g_t = X.
  Poly bracket(const Vec& a, const Vec& b) const {
    const Poly f = monomial(a), g = monomial(b);
    Poly gz;  // ∂_Z g_t = −(n+1) Z^n − t (n+1−k) Z^{n−k}
    add(gz, Mono{0, 0, n_, 0}, Rational(-(n_ + 1)));
    add(gz, Mono{0, 0, n_ - k_, 1}, Rational(-(n_ + 1 - k_)));
    const Poly y{{Mono{0, 1, 0, 0}, Rational(1)}};
    const Poly x{{Mono{1, 0, 0, 0}, Rational(1)}};
    // {f,g} = Σ_{u<v} (f_u g_v − f_v g_u) {u,v}
    Poly out;
    auto term = [&](int u, int v, const Poly& uv) {
      Poly c = mul(diff(f, u), diff(g, v));
      for (const auto& [m, q] : mul(diff(f, v), diff(g, u))) add(c, m, -q);
      for (const auto& [m, q] : mul(c, uv)) add(out, m, q);
    };
    term(0, 1, gz);  // {X,Y}
    term(1, 2, y);   // {Y,Z}
    term(2, 0, x);   // {Z,X}
    return reduce(out);
  }

  /// Coefficient of t^j as an algebra element.
  AlgebraElement t_coefficient(const Poly& p, int j) const {
    AlgebraElement out;
    for (const auto& [m, q] : p)
      if (m[3] == j) out.add(exponent(m), q);
    return out;
  }

  Vec exponent(const Mono& m) const {
    const Vec s1{0, 1, 0}, s2{1, 1, 0}, s3{n_ + 1, n_, 0};
    return m[0] * s1 + m[1] * s3 + m[2] * s2;
  }

  /// ξ_j: t^j coefficient of the deformed product (ξ_0 = μ).
  SCochain xi(const SemigroupAlgebra& alg, int j) const {
    (void)alg;
    const SurfaceDeformation self = *this;
    return rule_cochain<Vec>(2, [self, j](const std::vector<Vec>& a) {
      return self.t_coefficient(self.product(a[0], a[1]), j);
    });
  }

  /// ξ_{p,j}: t^j coefficient of the deformed bracket (ξ_{p,0} = π_g).
  SCochain xi_p(const SemigroupAlgebra& alg, int j) const {
    (void)alg;
    const SurfaceDeformation self = *this;
    return rule_cochain<Vec>(2, [self, j](const std::vector<Vec>& a) {
      return self.t_coefficient(self.bracket(a[0], a[1]), j);
    });
  }

 private:
  static void add(Poly& p, const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = p.try_emplace(m, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) p.erase(it);
    }
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        const Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        if (m[3] <= tmax_) add(out, m, ca * cb);
      }
    return out;
  }

  static Poly diff(const Poly& p, int var) {
    Poly out;
    for (const auto& [m, c] : p) {
      if (m[var] == 0) continue;
      Mono d = m;
      --d[var];
      add(out, d, c * m[var]);
    }
    return out;
  }

  Poly reduce(Poly p) const {
    Poly out;
    while (!p.empty()) {
      auto it = p.begin();
      const Mono m = it->first;
      const Rational c = it->second;
      p.erase(it);
      if (m[0] > 0 && m[1] > 0) {
        Mono a = m, b = m;
        --a[0], --a[1], --b[0], --b[1];
        a[2] += n_ + 1;
        b[2] += n_ + 1 - k_;
        ++b[3];
        add(p, a, c);
        if (b[3] <= tmax_) add(p, b, c);
      } else {
        add(out, m, c);
      }
    }
    return out;
  }

  int n_, k_, tmax_;
};

}  // namespace toricdef
