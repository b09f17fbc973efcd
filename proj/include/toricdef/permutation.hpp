#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "toricdef/errors.hpp"
#include "toricdef/lincomb.hpp"

namespace toricdef {

/// π as the image list (π(0), …, π(n−1)). A cochain acts by
/// (f·π)(a_0, …, a_{n−1}) = f(a_{π(0)}, …, a_{π(n−1)}).
using Perm = std::vector<int>;
using GroupElement = LinComb<Perm>;

inline constexpr int kDefaultArityCap = 5;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline int sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// The permutation ρ with (f·π)·σ = f·ρ, namely ρ = σ∘π.
inline Perm compose_action(const Perm& pi, const Perm& sigma) {
  Perm r(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) r[i] = sigma[pi[i]];
  return r;
}

/// Product in the group algebra matching the right action on cochains:
/// f·(x*y) = (f·x)·y.
inline GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  GroupElement out;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) out.add(compose_action(p, q), a * b);
  return out;
}

/// Σ sgn(π) π over the (i, n−i) shuffles: argument sequences interleaving
/// (a_0..a_{i−1}) and (a_i..a_{n−1}) with each block kept in order.
inline GroupElement shuffle_sum(int i, int n) {
  GroupElement out;
  std::vector<bool> first(n, false);
  std::fill(first.begin(), first.begin() + i, true);
  std::sort(first.begin(), first.end());
  do {
    Perm p(n);
    int next_a = 0, next_b = i;
    for (int pos = 0; pos < n; ++pos) p[pos] = first[pos] ? next_a++ : next_b++;
    out.add(p, sign(p));
  } while (std::next_permutation(first.begin(), first.end()));
  return out;
}

/// s_n = Σ_{i=1}^{n−1} s_{i,n−i}.
inline GroupElement total_shuffle(int n) {
  GroupElement out;
  for (int i = 1; i < n; ++i) out.add(shuffle_sum(i, n));
  return out;
}

inline Rational hodge_eigenvalue(int i) { return Rational((1L << i) - 2); }

namespace detail {

inline GroupElement scalar_element(int n, const Rational& c) {
  return GroupElement(identity_perm(n), c);
}

struct ProjectorCache {
  std::mutex mu;
  std::map<int, std::vector<GroupElement>> table;
};

inline ProjectorCache& projector_cache() {
  static ProjectorCache cache;
  return cache;
}

}  // namespace detail

/// e_n(1), …, e_n(n): Lagrange interpolation polynomials in s_n through the
/// eigenvalues 2^j − 2.
inline const std::vector<GroupElement>& hodge_projectors(int n, int arity_cap = kDefaultArityCap) {
  if (n < 1) throw InputError("arity must be positive");
  if (n > arity_cap) throw ResourceError("arity " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(arity_cap));
  auto& cache = detail::projector_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.table.find(n);
  if (it != cache.table.end()) return it->second;
  const GroupElement s = total_shuffle(n);
  std::vector<GroupElement> projectors;
  for (int i = 1; i <= n; ++i) {
    GroupElement e = detail::scalar_element(n, 1);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      GroupElement factor = s;
      factor.add(identity_perm(n), -hodge_eigenvalue(j));
      e = multiply(e, factor.scaled(1 / (hodge_eigenvalue(i) - hodge_eigenvalue(j))));
    }
    projectors.push_back(std::move(e));
  }
  return cache.table.emplace(n, std::move(projectors)).first->second;
}

inline const GroupElement& hodge_projector(int n, int i, int arity_cap = kDefaultArityCap) {
  if (i < 1 || i > n) throw InputError("Hodge index " + std::to_string(i) + " outside 1.." +
                                       std::to_string(n));
  return hodge_projectors(n, arity_cap)[i - 1];
}

}  // namespace toricdef
