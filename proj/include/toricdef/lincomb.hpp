#pragma once

#include <map>
#include <utility>

#include "toricdef/linalg.hpp"

namespace toricdef {

/// Finitely supported linear combination of basis keys with exact rational
/// coefficients. Zero coefficients are never stored.
template <class K>
class LinComb {
 public:
  using map_type = std::map<K, Rational>;

  LinComb() = default;
  explicit LinComb(const K& k, const Rational& c = 1) { add(k, c); }

  void add(const K& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinComb scaled(const Rational& s) const {
    LinComb out;
    if (s == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
  }

  Rational coefficient(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }
  friend LinComb operator+(LinComb a, const LinComb& b) {
    a.add(b);
    return a;
  }
  friend LinComb operator-(LinComb a, const LinComb& b) {
    a.add(b, -1);
    return a;
  }

 private:
  map_type terms_;
};

}  // namespace toricdef
