#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "toricdef/semigroup.hpp"

using namespace toricdef;

namespace {

/// Brute-force window: scan a generous box and filter.
std::vector<Vec> brute_window(const Cone& c, const Vec& w, std::int64_t d, std::int64_t box) {
  std::vector<Vec> out;
  const std::int64_t zb = c.dim == 3 ? box : 0;
  for (std::int64_t x = -box; x <= box; ++x)
    for (std::int64_t y = -box; y <= box; ++y)
      for (std::int64_t z = -zb; z <= zb; ++z) {
        const Vec p{x, y, z};
        if (c.contains_dual(p) && dot(w, p) <= d) out.push_back(p);
      }
  return out;
}

}  // namespace

TEST(Window, OriginOnlyAtZero) {
  const auto alg = surface_algebra(1, 0);
  ASSERT_EQ(alg.window_basis.size(), 1u);
  EXPECT_EQ(alg.window_basis[0], (Vec{0, 0, 0}));
}

TEST(Window, SurfaceMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (std::int64_t d = 0; d <= 8; ++d) {
      const auto alg = surface_algebra(n, d);
      auto brute = brute_window(alg.cone, alg.weight, d, 40);
      std::set<Vec> a(alg.window_basis.begin(), alg.window_basis.end());
      std::set<Vec> b(brute.begin(), brute.end());
      EXPECT_EQ(a, b) << "n=" << n << " d=" << d;
    }
  EXPECT_EQ(surface_algebra(1, 6).window_basis.size(), 16u);
}

TEST(Window, SortedByWeightThenLex) {
  const auto alg = surface_algebra(2, 9);
  for (std::size_t i = 1; i < alg.window_basis.size(); ++i) {
    const auto& a = alg.window_basis[i - 1];
    const auto& b = alg.window_basis[i];
    const auto wa = dot(alg.weight, a), wb = dot(alg.weight, b);
    EXPECT_TRUE(wa < wb || (wa == wb && a < b));
  }
}

TEST(Window, P123DualMembership) {
  const auto g = dual_cone({{-1, -1, 1}, {2, -1, 1}, {-1, 1, 1}});
  const auto alg = make_algebra(g.cone(), 5);
  EXPECT_FALSE(alg.window_basis.empty());
  for (const auto& l : alg.window_basis)
    for (const auto& a : g.rays) EXPECT_GE(dot(a, l), 0);
  auto brute = brute_window(g.cone(), alg.weight, 5, 12);
  EXPECT_EQ(alg.window_basis.size(), brute.size());
}

TEST(Window, RandomConesMatchBruteForce) {
  testing_support::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = cone_over_polygon(testing_support::random_polygon(rng, 5, 2));
    const auto alg = make_algebra(g.cone(), 4);
    auto brute = brute_window(g.cone(), alg.weight, 4, 10);
    EXPECT_EQ(alg.window_basis.size(), brute.size());
  }
}

TEST(Window, DivisibilityClosed) {
  const auto alg = surface_algebra(2, 10);
  std::set<Vec> w(alg.window_basis.begin(), alg.window_basis.end());
  for (const auto& a : alg.window_basis)
    for (const auto& b : alg.window_basis)
      if (w.count(a + b)) {
        EXPECT_TRUE(w.count(a));
        EXPECT_TRUE(w.count(b));
      }
}

TEST(Window, NonInteriorWeightRejected) {
  const auto c = surface_cone(1);
  EXPECT_THROW(enumerate_window(c, Vec{1, 0, 0}, 3), InputError);
}

TEST(Surface, Presentation) {
  EXPECT_THROW(surface_algebra(0), InputError);
  for (int n = 1; n <= 6; ++n) {
    const auto alg = surface_algebra(n);
    const auto& p = *alg.surface;
    EXPECT_TRUE(is_zero(p.S1 + p.S3 - (n + 1) * p.S2));
    EXPECT_TRUE(alg.contains(p.S1));
    EXPECT_TRUE(alg.contains(p.S2));
    EXPECT_TRUE(alg.contains(p.S3));
    EXPECT_EQ(alg.multiply(AlgebraElement(p.S1), AlgebraElement(p.S3)),
              AlgebraElement((n + 1) * p.S2));
  }
  EXPECT_EQ(surface_algebra(1).surface->S3, (Vec{2, 1, 0}));
  EXPECT_EQ(surface_algebra(3).surface->S3, (Vec{4, 3, 0}));
}

TEST(Surface, NormalFormReconstructsExponent) {
  for (int n = 1; n <= 4; ++n) {
    const auto alg = surface_algebra(n, 12);
    const auto& p = *alg.surface;
    for (const auto& l : alg.window_basis) {
      const auto nf = surface_normal_form(n, l);
      EXPECT_TRUE(nf.x == 0 || nf.y == 0);
      EXPECT_GE(nf.z, 0);
      EXPECT_EQ(nf.x * p.S1 + nf.y * p.S3 + nf.z * p.S2, l);
    }
  }
}

TEST(Algebra, ProductCommutativeAssociative) {
  const auto alg = surface_algebra(2, 6);
  testing_support::Rng rng(3);
  auto random_element = [&]() {
    AlgebraElement e;
    for (int k = 0; k < 3; ++k)
      e.add(alg.window_basis[rng.uniform(0, alg.window_basis.size() - 1)],
            frac(rng.uniform(-5, 5), rng.uniform(1, 4)));
    return e;
  };
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ(alg.multiply(a, b), alg.multiply(b, a));
    EXPECT_EQ(alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c)));
  }
}

TEST(Jacobian, DimensionEqualsN) {
  for (int n = 1; n <= 10; ++n) {
    const auto j = jacobian_ring_dim(n);
    EXPECT_EQ(j.dim, n);
    ASSERT_EQ(j.basis.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(j.basis[0], "1");
  }
  EXPECT_EQ(jacobian_ring_dim(4).basis[3], "z^3");
  EXPECT_EQ(jacobian_ring_dim(0).dim, 0);
}
