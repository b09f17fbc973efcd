#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/errors.hpp"
#include "toricdef/lincomb.hpp"
#include "toricdef/permutation.hpp"
#include "toricdef/semigroup.hpp"

namespace toricdef {

/// Multilinear map A^{⊗n} → A on a basis indexed by K. Semigroup algebras use
/// K = Vec (monomial exponents); finite-dimensional algebras use K = int.
template <class K>
struct CochainNode {
  int arity = 0;
  bool symbolic = true;
  virtual ~CochainNode() = default;
  virtual LinComb<K> eval(const std::vector<K>& args) const = 0;
};

template <class K>
class Cochain {
 public:
  using Args = std::vector<K>;

  Cochain() = default;
  explicit Cochain(std::shared_ptr<const CochainNode<K>> node) : node_(std::move(node)) {}

  int arity() const { return node_->arity; }
  /// Symbolic cochains are total on the whole basis; tables are not.
  bool symbolic() const { return node_->symbolic; }
  bool valid() const { return static_cast<bool>(node_); }

  LinComb<K> operator()(const Args& args) const {
    if (static_cast<int>(args.size()) != arity())
      throw ContractError("cochain of arity " + std::to_string(arity()) + " called with " +
                          std::to_string(args.size()) + " arguments");
    return node_->eval(args);
  }

  /// Multilinear extension to linear combinations of basis elements.
  LinComb<K> apply(const std::vector<LinComb<K>>& args) const {
    LinComb<K> out;
    Args tuple(args.size());
    expand(args, 0, Rational(1), tuple, out);
    return out;
  }

 private:
  void expand(const std::vector<LinComb<K>>& args, std::size_t slot, const Rational& c,
              Args& tuple, LinComb<K>& out) const {
    if (slot == args.size()) {
      out.add((*this)(tuple), c);
      return;
    }
    for (const auto& [k, a] : args[slot]) {
      tuple[slot] = k;
      expand(args, slot + 1, c * a, tuple, out);
    }
  }

  std::shared_ptr<const CochainNode<K>> node_;
};

namespace detail {

template <class K>
struct RuleNode : CochainNode<K> {
  std::function<LinComb<K>(const std::vector<K>&)> fn;
  LinComb<K> eval(const std::vector<K>& args) const override { return fn(args); }
};

template <class K>
struct TableNode : CochainNode<K> {
  std::map<std::vector<K>, LinComb<K>> values;
  std::function<bool(const std::vector<K>&)> in_domain;
  LinComb<K> eval(const std::vector<K>& args) const override {
    auto it = values.find(args);
    if (it != values.end()) return it->second;
    if (in_domain && in_domain(args)) return {};
    throw DomainError("table cochain evaluated outside its stored tuples");
  }
};

/// Composite node with a per-tuple memo table.
template <class K>
struct MemoNode : CochainNode<K> {
  mutable std::mutex mu;
  mutable std::map<std::vector<K>, LinComb<K>> memo;

  LinComb<K> eval(const std::vector<K>& args) const final {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(args);
      if (it != memo.end()) return it->second;
    }
    LinComb<K> v = compute(args);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(args, std::move(v)).first->second;
  }
  virtual LinComb<K> compute(const std::vector<K>& args) const = 0;
};

template <class K>
struct SumNode : MemoNode<K> {
  std::vector<std::pair<Rational, Cochain<K>>> terms;
  LinComb<K> compute(const std::vector<K>& args) const override {
    LinComb<K> out;
    for (const auto& [c, f] : terms) out.add(f(args), c);
    return out;
  }
};

template <class K>
struct PermuteNode : MemoNode<K> {
  Cochain<K> f;
  GroupElement element;
  LinComb<K> compute(const std::vector<K>& args) const override {
    LinComb<K> out;
    std::vector<K> permuted(args.size());
    for (const auto& [p, c] : element) {
      for (std::size_t i = 0; i < args.size(); ++i) permuted[i] = args[p[i]];
      out.add(f(permuted), c);
    }
    return out;
  }
};

template <class K>
struct HochschildNode : MemoNode<K> {
  Cochain<K> f, mu;
  LinComb<K> compute(const std::vector<K>& a) const override {
    const int n = f.arity();
    LinComb<K> out;
    std::vector<K> tail(a.begin() + 1, a.end());
    out.add(mu.apply({LinComb<K>(a[0]), f(tail)}));
    for (int i = 1; i <= n; ++i) {
      std::vector<LinComb<K>> args;
      for (int k = 0; k <= n; ++k) {
        if (k == i) continue;
        if (k == i - 1)
          args.push_back(mu({a[i - 1], a[i]}));
        else
          args.push_back(LinComb<K>(a[k]));
      }
      out.add(f.apply(args), (i % 2 == 0) ? 1 : -1);
    }
    std::vector<K> head(a.begin(), a.end() - 1);
    out.add(mu.apply({f(head), LinComb<K>(a[n])}), ((n + 1) % 2 == 0) ? 1 : -1);
    return out;
  }
};

/// f∘g = Σ_i (−1)^{(i−1)(n−1)} f∘_i g.
template <class K>
struct CircleNode : MemoNode<K> {
  Cochain<K> f, g;
  LinComb<K> compute(const std::vector<K>& a) const override {
    const int m = f.arity(), n = g.arity();
    LinComb<K> out;
    for (int i = 0; i < m; ++i) {
      std::vector<LinComb<K>> args;
      for (int k = 0; k < i; ++k) args.push_back(LinComb<K>(a[k]));
      args.push_back(g(std::vector<K>(a.begin() + i, a.begin() + i + n)));
      for (int k = i + n; k < m + n - 1; ++k) args.push_back(LinComb<K>(a[k]));
      out.add(f.apply(args), ((i * (n - 1)) % 2 == 0) ? 1 : -1);
    }
    return out;
  }
};

template <class K>
void require_symbolic(const Cochain<K>& f, const char* op) {
  if (!f.symbolic())
    throw UnsupportedRepresentation(std::string(op) + " needs a symbolic cochain operand");
}

}  // namespace detail

template <class K>
Cochain<K> rule_cochain(int arity, std::function<LinComb<K>(const std::vector<K>&)> fn) {
  auto node = std::make_shared<detail::RuleNode<K>>();
  node->arity = arity;
  node->fn = std::move(fn);
  return Cochain<K>(node);
}

template <class K>
Cochain<K> zero_cochain(int arity) {
  return rule_cochain<K>(arity, [](const std::vector<K>&) { return LinComb<K>(); });
}

/// Values on finitely many tuples. Tuples satisfying in_domain but absent from
/// the table evaluate to zero; anything else raises DomainError.
template <class K>
Cochain<K> table_cochain(int arity, std::map<std::vector<K>, LinComb<K>> values,
                         std::function<bool(const std::vector<K>&)> in_domain = {}) {
  auto node = std::make_shared<detail::TableNode<K>>();
  node->arity = arity;
  node->symbolic = false;
  for (auto& [k, v] : values) {
    if (static_cast<int>(k.size()) != arity) throw InputError("table tuple has wrong arity");
    if (!v.empty()) node->values.emplace(k, std::move(v));
  }
  node->in_domain = std::move(in_domain);
  return Cochain<K>(node);
}

template <class K>
Cochain<K> linear_combination(const std::vector<std::pair<Rational, Cochain<K>>>& terms,
                              int arity) {
  auto node = std::make_shared<detail::SumNode<K>>();
  node->arity = arity;
  for (const auto& [c, f] : terms) {
    if (f.arity() != arity) throw ContractError("adding cochains of different arity");
    if (c == 0) continue;
    node->symbolic = node->symbolic && f.symbolic();
    node->terms.emplace_back(c, f);
  }
  return Cochain<K>(node);
}

template <class K>
Cochain<K> operator+(const Cochain<K>& f, const Cochain<K>& g) {
  return linear_combination<K>({{1, f}, {1, g}}, f.arity());
}

template <class K>
Cochain<K> operator-(const Cochain<K>& f, const Cochain<K>& g) {
  return linear_combination<K>({{1, f}, {-1, g}}, f.arity());
}

template <class K>
Cochain<K> operator*(const Rational& c, const Cochain<K>& f) {
  return linear_combination<K>({{c, f}}, f.arity());
}

/// f·x for a group-algebra element x.
template <class K>
Cochain<K> shuffle_apply(const Cochain<K>& f, const GroupElement& x) {
  auto node = std::make_shared<detail::PermuteNode<K>>();
  node->arity = f.arity();
  node->symbolic = f.symbolic();
  node->f = f;
  for (const auto& [p, c] : x)
    if (static_cast<int>(p.size()) != f.arity())
      throw ContractError("permutation size does not match cochain arity");
  node->element = x;
  return Cochain<K>(node);
}

template <class K>
Cochain<K> hodge_project(const Cochain<K>& f, int i, int arity_cap = kDefaultArityCap) {
  return shuffle_apply(f, hodge_projector(f.arity(), i, arity_cap));
}

/// Hochschild differential with respect to the product cochain mu.
template <class K>
Cochain<K> hochschild_d(const Cochain<K>& f, const Cochain<K>& mu) {
  detail::require_symbolic(f, "hochschild_d");
  detail::require_symbolic(mu, "hochschild_d");
  if (mu.arity() != 2) throw ContractError("product cochain must be bilinear");
  auto node = std::make_shared<detail::HochschildNode<K>>();
  node->arity = f.arity() + 1;
  node->f = f;
  node->mu = mu;
  return Cochain<K>(node);
}

template <class K>
Cochain<K> circle(const Cochain<K>& f, const Cochain<K>& g) {
  detail::require_symbolic(f, "circle product");
  detail::require_symbolic(g, "circle product");
  auto node = std::make_shared<detail::CircleNode<K>>();
  node->arity = f.arity() + g.arity() - 1;
  node->f = f;
  node->g = g;
  return Cochain<K>(node);
}

/// [f, g] = f∘g − (−1)^{(m−1)(n−1)} g∘f.
template <class K>
Cochain<K> gerstenhaber_bracket(const Cochain<K>& f, const Cochain<K>& g) {
  const int m = f.arity(), n = g.arity();
  const int s = ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
  return linear_combination<K>({{1, circle(f, g)}, {-s, circle(g, f)}}, m + n - 1);
}

/// Calls fn on every n-tuple of the basis in lexicographic index order.
template <class K, class Fn>
void for_each_tuple(const std::vector<K>& basis, int n, Fn&& fn) {
  if (basis.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<K> tuple(n, basis.front());
  while (true) {
    for (int k = 0; k < n; ++k) tuple[k] = basis[idx[k]];
    fn(static_cast<const std::vector<K>&>(tuple));
    int k = n - 1;
    while (k >= 0 && ++idx[k] == basis.size()) idx[k--] = 0;
    if (k < 0) break;
  }
}

/// First tuple where f and g differ, if any.
template <class K>
std::optional<std::vector<K>> first_difference(const Cochain<K>& f, const Cochain<K>& g,
                                               const std::vector<K>& basis) {
  std::optional<std::vector<K>> bad;
  for_each_tuple(basis, f.arity(), [&](const std::vector<K>& t) {
    if (!bad && f(t) != g(t)) bad = t;
  });
  return bad;
}

template <class K>
bool vanishes_on(const Cochain<K>& f, const std::vector<K>& basis) {
  return !first_difference(f, zero_cochain<K>(f.arity()), basis);
}

// ---- semigroup-algebra cochains -------------------------------------------

using SCochain = Cochain<Vec>;
using Coefficient = std::function<Rational(const std::vector<Vec>&)>;

/// f(x^{λ_1}, …, x^{λ_n}) = c(λ)·x^{λ_1+…+λ_n−R}, dropped when the exponent
/// leaves Λ.
inline SCochain monomial_cochain(const SemigroupAlgebra& alg, int arity, const Vec& shift,
                                 Coefficient coef) {
  const Cone cone = alg.cone;
  return rule_cochain<Vec>(arity, [cone, shift, coef](const std::vector<Vec>& args) {
    Vec e = -shift;
    for (const auto& l : args) e += l;
    if (!cone.contains_dual(e)) return AlgebraElement();
    const Rational c = coef(args);
    return c == 0 ? AlgebraElement() : AlgebraElement(e, c);
  });
}

/// Multi-additive coefficient Σ T[i_1..i_n] λ_1[i_1]···λ_n[i_n] from a tensor
/// over coordinate indices.
using CoefficientTensor = std::map<std::vector<int>, Rational>;

inline Coefficient tensor_coefficient(CoefficientTensor tensor) {
  return [tensor = std::move(tensor)](const std::vector<Vec>& args) {
    Rational c = 0;
    for (const auto& [idx, t] : tensor) {
      Rational term = t;
      for (std::size_t k = 0; k < idx.size() && term != 0; ++k) term *= args[k][idx[k]];
      c += term;
    }
    return c;
  };
}

inline SCochain product_cochain(const SemigroupAlgebra& alg) {
  return monomial_cochain(alg, 2, Vec{0, 0, 0}, [](const std::vector<Vec>&) { return Rational(1); });
}

}  // namespace toricdef
