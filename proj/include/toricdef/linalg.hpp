#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toricdef {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// n/d in canonical form.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

/// Basis of {x : m x = 0}.
inline std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& rhs,
                                           std::size_t cols) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  const auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

}  // namespace toricdef
