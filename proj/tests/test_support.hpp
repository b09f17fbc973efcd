#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "toricdef/cone.hpp"

namespace testing_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Convex hull (strict vertices only) of random lattice points in a box.
inline std::vector<toricdef::Point2> random_polygon(Rng& rng, int points, std::int64_t box) {
  using toricdef::Point2;
  while (true) {
    std::vector<Point2> pts;
    for (int i = 0; i < points; ++i) pts.push_back({rng.uniform(-box, box), rng.uniform(-box, box)});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    auto turn = [](const Point2& o, const Point2& a, const Point2& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
      while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
      hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    if (hull.size() >= 3) return hull;
  }
}

}  // namespace testing_support

#include "toricdef/cochain.hpp"

namespace testing_support {

inline toricdef::Rational random_rational(Rng& rng, std::int64_t num = 4, std::int64_t den = 3) {
  return toricdef::frac(rng.uniform(-num, num), rng.uniform(1, den));
}

/// Random multi-additive coefficient tensor plus a constant term.
inline toricdef::Coefficient random_coefficient(Rng& rng, int arity, int dim, int terms = 3) {
  toricdef::CoefficientTensor tensor;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(arity);
    for (auto& i : idx) i = static_cast<int>(rng.uniform(0, dim - 1));
    tensor[idx] += random_rational(rng);
  }
  const auto constant = random_rational(rng);
  auto tc = toricdef::tensor_coefficient(tensor);
  return [tc, constant](const std::vector<toricdef::Vec>& a) -> toricdef::Rational {
    return tc(a) + constant;
  };
}

inline toricdef::SCochain random_symbolic(Rng& rng, const toricdef::SemigroupAlgebra& alg,
                                          int arity, const toricdef::Vec& shift) {
  return toricdef::monomial_cochain(alg, arity, shift, random_coefficient(rng, arity, alg.cone.dim));
}

}  // namespace testing_support
