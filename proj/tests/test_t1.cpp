#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toricdef/t1.hpp"

using namespace toricdef;

namespace {

GorensteinCone p123() { return dual_cone({{-1, -1, 1}, {2, -1, 1}, {-1, 1, 1}}); }
GorensteinCone hexagon() {
  return cone_over_polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

/// Span of K^R_{j,j+1} ∩ box, computed by enumerating lattice points of σ∨.
int brute_edge_span_dim(const GorensteinCone& g, int j, const Vec& r, std::int64_t box) {
  RationalMatrix pts;
  const int k = g.next(j);
  const auto wj = dot(g.rays[j], r), wk = dot(g.rays[k], r);
  for (std::int64_t x = -box; x <= box; ++x)
    for (std::int64_t y = -box; y <= box; ++y)
      for (std::int64_t z = -box; z <= box; ++z) {
        const Vec p{x, y, z};
        if (!g.cone().contains_dual(p)) continue;
        if (dot(g.rays[j], p) < wj && dot(g.rays[k], p) < wk)
          pts.push_back({Rational(x), Rational(y), Rational(z)});
      }
  return static_cast<int>(rank(pts));
}

}  // namespace

TEST(Binomial, Conventions) {
  EXPECT_EQ(binom(3, 2), 3);
  EXPECT_EQ(binom(2, 3), 0);
  EXPECT_EQ(binom(-1, 0), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, -1), 0);
}

TEST(EdgeSurface, P123) {
  const auto g = p123();
  const Vec rs = g.canonical_degree;
  EXPECT_EQ(edge_surface_t1(g, 0, 2 * rs), 1);
  EXPECT_EQ(edge_surface_t1(g, 1, 2 * rs), 0);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(edge_surface_t1(g, j, rs), 0);
}

TEST(SpanIntersection, Examples) {
  const auto g = p123();
  const Vec rs = g.canonical_degree;
  EXPECT_EQ(span_intersection_dim(hexagon(), 2 * hexagon().canonical_degree), 3);
  EXPECT_EQ(span_intersection_dim(g, 2 * rs), 1);
  EXPECT_EQ(span_intersection_dim(g, 3 * rs), 2);
  EXPECT_THROW(span_intersection_dim(g, 2 * rs - g.dual_rays[0]), ContractError);
  EXPECT_EQ(s_i(g, 2 * rs - g.dual_rays[0], 1), 0);
  EXPECT_EQ(s_i(hexagon(), 2 * hexagon().canonical_degree, 2), 3);
  EXPECT_EQ(s_i(g, 2 * rs, 0), 1);
}

TEST(T1Dim, Examples) {
  const auto g = p123();
  const Vec rs = g.canonical_degree;
  EXPECT_EQ(t1_dim(g, rs, 1), 0);
  const Vec r = 2 * rs - g.dual_rays[0];
  EXPECT_EQ(t1_dim(g, r, 1), 1);
  EXPECT_EQ(t1_dim(g, r, 2), 2);
  EXPECT_EQ(t1_dim(g, r, 3), 1);
  EXPECT_EQ(t1_dim(g, r, 4), 0);
  EXPECT_EQ(t1_dim(hexagon(), hexagon().canonical_degree, 2), 3);
}

TEST(Prefilter, Examples) {
  const auto g = p123();
  // Pairings (3, 2, 1) are realized on the cone over a unimodular triangle.
  const auto smooth = cone_over_polygon({{0, 0}, {1, 0}, {0, 1}});
  const Vec rs = g.canonical_degree;
  EXPECT_EQ(g.weights(g.dual_rays[1]), (std::vector<std::int64_t>{6, 0, 0}));
  EXPECT_FALSE(vanishing_prefilter(g, g.dual_rays[1]));
  EXPECT_FALSE(vanishing_prefilter(g, 3 * rs));
  Vec r{};
  bool found = false;
  for (std::int64_t x = -5; x <= 5 && !found; ++x)
    for (std::int64_t y = -5; y <= 5 && !found; ++y)
      for (std::int64_t z = -5; z <= 5 && !found; ++z)
        if (smooth.weights({x, y, z}) == std::vector<std::int64_t>{3, 2, 1}) {
          r = {x, y, z};
          found = true;
        }
  ASSERT_TRUE(found);
  EXPECT_TRUE(vanishing_prefilter(smooth, r));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(t1_dim(smooth, r, i), 0);
}

TEST(EdgeSpan, MatchesBruteForceEnumeration) {
  testing_support::Rng rng(21);
  std::vector<GorensteinCone> cones{p123(), hexagon()};
  for (int t = 0; t < 6; ++t) cones.push_back(cone_over_polygon(testing_support::random_polygon(rng, 5, 2)));
  for (const auto& g : cones)
    for (int trial = 0; trial < 15; ++trial) {
      Vec r = rng.uniform(1, 4) * g.canonical_degree;
      r += rng.uniform(-2, 2) * g.dual_rays[rng.uniform(0, g.size() - 1)];
      for (int j = 0; j < g.size(); ++j) {
        const int k = g.next(j);
        if (dot(g.rays[j], r) < 1 || dot(g.rays[k], r) < 1) continue;
        EXPECT_EQ(edge_span(g, j, r).dim(), brute_edge_span_dim(g, j, r, 9))
            << to_string(r) << " edge " << j;
      }
    }
}

TEST(EdgeSpan, QuotientDimensionMatchesPairingFormula) {
  testing_support::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const auto g = cone_over_polygon(testing_support::random_polygon(rng, 6, 3));
    for (int trial = 0; trial < 40; ++trial) {
      const Vec r{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 8)};
      const auto q = q_polyhedron(g, r);
      for (const auto& [j, k] : q.compact_edges) {
        const int formula = std::max(0, q.W[j] + q.W[k] - 2 - edge_surface_t1(g, j, r));
        EXPECT_EQ(edge_span(g, j, r).quotient_dim, formula) << to_string(r) << " edge " << j;
      }
    }
  }
}

TEST(EdgeSpan, EdgeWeightsAgreeModuloLength) {
  // Lattice degrees satisfy ⟨a_j,R⟩ ≡ ⟨a_{j+1},R⟩ mod ℓ(j).
  const auto g = p123();
  for (std::int64_t x = -4; x <= 4; ++x)
    for (std::int64_t y = -4; y <= 4; ++y)
      for (std::int64_t z = -4; z <= 4; ++z)
        for (int j = 0; j < 3; ++j) {
          const auto d = dot(g.rays[j], {x, y, z}) - dot(g.rays[g.next(j)], {x, y, z});
          EXPECT_EQ(d % g.edge_length(j), 0);
        }
}

TEST(T1Property, InvariantsOnRandomScans) {
  testing_support::Rng rng(23);
  for (int t = 0; t < 25; ++t) {
    const auto g = cone_over_polygon(testing_support::random_polygon(rng, 6, 3));
    for (int trial = 0; trial < 30; ++trial) {
      const Vec r{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-3, 6)};
      bool any = false;
      for (int i = 1; i <= 5; ++i) {
        const auto d = t1_dim(g, r, i);
        EXPECT_GE(d, 0);
        any = any || d > 0;
        const auto s = s_i(g, r, i);
        EXPECT_LE(s, binom(3, i));
        if (!in_interior(r, g)) {
          EXPECT_EQ(s, 0);
        }
      }
      if (vanishing_prefilter(g, r)) {
        EXPECT_FALSE(any) << to_string(r);
      }
      EXPECT_EQ(t1_dim(g, r, 4), 0);
      EXPECT_EQ(t1_dim(g, r, 5), 0);
    }
  }
}
