#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toricdef/cone.hpp"

using namespace toricdef;

namespace {

GorensteinCone p123() { return dual_cone({{-1, -1, 1}, {2, -1, 1}, {-1, 1, 1}}); }

}  // namespace

TEST(LatticeLength, Gcd) {
  EXPECT_EQ(lattice_length({3, 0, 0}), 3);
  EXPECT_EQ(lattice_length({-3, 2, 0}), 1);
  EXPECT_EQ(lattice_length({0, -2, 0}), 2);
  EXPECT_EQ(lattice_length({0, 0, 0}), 0);
}

TEST(DualCone, P123DualRays) {
  const auto g = p123();
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.dual_rays[0], (Vec{0, 1, 1}));
  EXPECT_EQ(g.dual_rays[1], (Vec{-2, -3, 1}));
  EXPECT_EQ(g.dual_rays[2], (Vec{1, 0, 1}));
  EXPECT_EQ(g.canonical_degree, (Vec{0, 0, 1}));
  EXPECT_EQ(g.edge_lengths(), (std::vector<std::int64_t>{3, 1, 2}));
}

TEST(DualCone, UnitSquare) {
  const auto g = cone_over_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ASSERT_EQ(g.size(), 4);
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(dot(g.rays[j], g.dual_rays[j]), 0);
    EXPECT_EQ(dot(g.rays[g.next(j)], g.dual_rays[j]), 0);
    EXPECT_TRUE(is_primitive(g.dual_rays[j]));
  }
  EXPECT_EQ(g.canonical_degree, (Vec{0, 0, 1}));
}

TEST(DualCone, PolygonOrderIsCanonicalized) {
  const auto a = cone_over_polygon({{1, 1}, {0, 0}, {0, 1}, {1, 0}});
  const auto b = cone_over_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(a.rays, b.rays);
}

TEST(DualCone, Rejections) {
  EXPECT_THROW(dual_cone({{1, 0, 1}, {0, 1, 1}}), InputError);
  EXPECT_THROW(dual_cone({{1, 0, 1}, {2, 0, 2}, {0, 1, 1}}), InputError);
  // Not cyclically ordered.
  EXPECT_THROW(dual_cone({{0, 0, 1}, {1, 1, 1}, {1, 0, 1}, {0, 1, 1}}), InputError);
  // Rays at different heights: no common canonical degree.
  EXPECT_THROW(dual_cone({{1, 0, 1}, {0, 1, 1}, {-1, -1, 2}, {0, -1, 1}}), NotGorensteinError);
  EXPECT_THROW(cone_over_polygon({{0, 0}, {1, 1}, {2, 2}}), InputError);
}

TEST(QPolyhedron, P123Examples) {
  const auto g = p123();
  const Vec rs = g.canonical_degree;
  auto q = q_polyhedron(g, rs);
  EXPECT_EQ(q.vertex_weights, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(q.W, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(q.compact);
  EXPECT_EQ(q.compact_edges.size(), 3u);

  q = q_polyhedron(g, 2 * rs);
  EXPECT_EQ(q.W, (std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(q.compact);

  const Vec r = 2 * rs - g.dual_rays[0];
  EXPECT_EQ(r, (Vec{0, -1, 1}));
  q = q_polyhedron(g, r);
  EXPECT_EQ(q.vertex_weights, (std::vector<std::int64_t>{2, 2, 0}));
  EXPECT_EQ(q.W, (std::vector<int>{2, 2, 0}));
  EXPECT_FALSE(q.compact);
  ASSERT_EQ(q.compact_edges.size(), 1u);
  EXPECT_EQ(q.compact_edges[0], (std::pair<int, int>{0, 1}));
  ASSERT_TRUE(q.vertices[0].has_value());
  EXPECT_EQ((*q.vertices[0])[0], frac(-1, 2));
  EXPECT_FALSE(q.vertices[2].has_value());
}

TEST(Interior, P123) {
  const auto g = p123();
  const Vec rs = g.canonical_degree;
  EXPECT_TRUE(in_interior(3 * rs - g.dual_rays[0], g));
  EXPECT_FALSE(in_interior(2 * rs - g.dual_rays[0], g));
  EXPECT_TRUE(in_interior(rs, g));
}

TEST(Overflow, CheckedArithmetic) {
  const Vec big{INT64_MAX, 0, 0};
  EXPECT_THROW(big + (Vec{1, 0, 0}), OverflowError);
  EXPECT_THROW(2 * big, OverflowError);
}

TEST(DualConeProperty, RandomPolygons) {
  testing_support::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto poly = testing_support::random_polygon(rng, 5, 7);
    const auto g = cone_over_polygon(poly);
    const int n = g.size();
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(dot(g.rays[j], g.canonical_degree), 1);
      EXPECT_GE(g.edge_length(j), 1);
      for (int l = 0; l < n; ++l) {
        const auto p = dot(g.rays[l], g.dual_rays[j]);
        if (l == j || l == g.next(j))
          EXPECT_EQ(p, 0);
        else
          EXPECT_GT(p, 0);
      }
      // Biduality: consecutive dual rays cut out the ray between them.
      const Vec c = cross(g.dual_rays[j], g.dual_rays[g.next(j)]);
      EXPECT_EQ(primitive(c), g.rays[g.next(j)]);
    }
    // The dual of the dual cone recovers the rays (shifted by one).
    const auto back = adjacent_face_normals(g.dual_rays);
    for (int j = 0; j < n; ++j) EXPECT_EQ(back[j], g.rays[g.next(j)]);
    EXPECT_EQ(q_polyhedron(g, g.canonical_degree).W, std::vector<int>(n, 1));
  }
}
