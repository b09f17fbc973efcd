#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "toricdef/errors.hpp"

namespace toricdef {

using TMono = std::vector<int>;  // exponents of t_1..t_r

/// k[t_1..t_r]/m^ν: every monomial of total degree ≥ ν vanishes.
struct ArtinCoefficients {
  int variables = 1;
  int nu = 2;

  static int total(const TMono& a) { return std::accumulate(a.begin(), a.end(), 0); }

  bool survives(const TMono& a) const { return total(a) < nu; }

  TMono one() const { return TMono(static_cast<std::size_t>(variables), 0); }

  TMono t(int i) const {
    TMono a = one();
    a.at(static_cast<std::size_t>(i)) = 1;
    return a;
  }

  static TMono add(const TMono& a, const TMono& b) {
    TMono c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
  }

  /// Nonconstant surviving monomials ordered by total degree, then lex.
  std::vector<TMono> monomials() const {
    std::vector<TMono> out;
    for (int d = 1; d < nu; ++d) {
      TMono a = one();
      // compositions of d into `variables` parts
      std::vector<TMono> level;
      auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == variables - 1) {
          a[pos] = left;
          level.push_back(a);
          return;
        }
        for (int e = left; e >= 0; --e) {
          a[pos] = e;
          self(self, pos + 1, left - e);
        }
      };
      rec(rec, 0, d);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  /// "t^3" → k[t]/t³; "t1,t2^2" → k[t1,t2]/m²; "t1..t3^2" → three variables.
  static ArtinCoefficients parse(const std::string& spec) {
    const auto caret = spec.rfind('^');
    if (caret == std::string::npos || caret + 1 >= spec.size())
      throw InputError("artin spec '" + spec + "' must look like t^3 or t1,t2^2");
    const std::string head = spec.substr(0, caret), tail = spec.substr(caret + 1);
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("artin spec '" + spec + "': exponent is not an integer");
    ArtinCoefficients b;
    b.nu = std::stoi(tail);
    if (b.nu < 1) throw InputError("artin spec '" + spec + "': exponent must be positive");
    if (head == "t") {
      b.variables = 1;
    } else if (const auto dots = head.find(".."); dots != std::string::npos) {
      b.variables = std::stoi(head.substr(dots + 3));
    } else {
      b.variables = 1 + static_cast<int>(std::count(head.begin(), head.end(), ','));
    }
    if (b.variables < 1) throw InputError("artin spec '" + spec + "': needs a variable");
    return b;
  }

  std::string to_string() const {
    if (variables == 1) return "t^" + std::to_string(nu);
    return "t1.." + std::string("t") + std::to_string(variables) + "^" + std::to_string(nu);
  }

  static std::string monomial_string(const TMono& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += a.size() == 1 ? "t" : "t" + std::to_string(i + 1);
      if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
  }
};

}  // namespace toricdef
