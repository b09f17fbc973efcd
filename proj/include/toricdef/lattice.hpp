#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "toricdef/errors.hpp"

namespace toricdef {

/// Integer vector in N or M. Two-dimensional lattices use the first two
/// coordinates and keep the third at zero.
using Vec = std::array<std::int64_t, 3>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("lattice addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("lattice multiplication overflow");
  return r;
}

}  // namespace detail

inline Vec operator+(const Vec& a, const Vec& b) {
  return {detail::checked_add(a[0], b[0]), detail::checked_add(a[1], b[1]),
          detail::checked_add(a[2], b[2])};
}

inline Vec operator-(const Vec& a) { return {-a[0], -a[1], -a[2]}; }

inline Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }

inline Vec operator*(std::int64_t k, const Vec& a) {
  return {detail::checked_mul(k, a[0]), detail::checked_mul(k, a[1]),
          detail::checked_mul(k, a[2])};
}

inline Vec& operator+=(Vec& a, const Vec& b) { return a = a + b; }

/// Pairing between N and M.
inline std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t r = 0;
  for (int k = 0; k < 3; ++k) r = detail::checked_add(r, detail::checked_mul(a[k], b[k]));
  return r;
}

inline Vec cross(const Vec& a, const Vec& b) {
  using detail::checked_add;
  using detail::checked_mul;
  return {checked_add(checked_mul(a[1], b[2]), -checked_mul(a[2], b[1])),
          checked_add(checked_mul(a[2], b[0]), -checked_mul(a[0], b[2])),
          checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]))};
}

/// 2x2 determinant of the first two coordinates.
inline std::int64_t det2(const Vec& a, const Vec& b) {
  return detail::checked_add(detail::checked_mul(a[0], b[1]), -detail::checked_mul(a[1], b[0]));
}

inline std::int64_t det3(const Vec& a, const Vec& b, const Vec& c) { return dot(a, cross(b, c)); }

inline bool is_zero(const Vec& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/// Number of lattice segments on the segment from 0 to v.
inline std::int64_t lattice_length(const Vec& v) {
  return std::gcd(std::gcd(v[0], v[1]), v[2]);
}

inline bool is_primitive(const Vec& v) { return lattice_length(v) == 1; }

inline Vec primitive(const Vec& v) {
  const std::int64_t g = lattice_length(v);
  if (g == 0) throw InputError("zero vector has no primitive direction");
  return {v[0] / g, v[1] / g, v[2] / g};
}

/// Floor and ceiling division for signed integers.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::string to_string(const Vec& v, int dim = 3) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < dim; ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace toricdef
