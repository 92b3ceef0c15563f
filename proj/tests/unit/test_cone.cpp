#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/cone.hpp"

using namespace nmz;
using test::iv;

namespace {
HalfSpaces orthant(std::size_t n, bool strict) {
  HalfSpaces h;
  h.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    (strict ? h.strict : h.weak).push_back(e);
  }
  return h;
}
}  // namespace

TEST(Cone, ClosedSimplex) {
  RationalCone c(orthant(3, false));
  EXPECT_EQ(c.rays().size(), 3u);
  EXPECT_EQ(c.dimension(), 3u);
  EXPECT_EQ(c.faces().size(), 8u);
  EXPECT_EQ(c.open_faces().size(), 7u);
  EXPECT_EQ(c.euler_limit(), -1);
}

TEST(Cone, OpenOrthantHasOneOpenFace) {
  RationalCone c(orthant(3, true));
  EXPECT_EQ(c.open_faces().size(), 1u);
  EXPECT_EQ(c.euler_limit(), -1);
  EXPECT_FALSE(c.contains(iv({1, 0, 1})));
  EXPECT_TRUE(c.contains(iv({1, 2, 1})));
}

TEST(Cone, MixedStrictness) {
  HalfSpaces h;
  h.dim = 3;
  h.weak = {iv({1, 0, 0}), iv({0, 1, 0})};
  h.strict = {iv({0, 0, 1})};
  RationalCone c(h);
  EXPECT_EQ(c.open_faces().size(), 4u);
  EXPECT_EQ(c.euler_limit(), 0);
}

TEST(Cone, EqualitiesReduceDimension) {
  HalfSpaces h = orthant(3, false);
  h.eqs = {iv({1, -1, 0})};
  RationalCone c(h);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.rays().size(), 2u);
  EXPECT_TRUE(c.contains(iv({2, 2, 5})));
  EXPECT_FALSE(c.contains(iv({2, 1, 5})));
}

TEST(Cone, EmptyWhenStrictContradicts) {
  HalfSpaces h;
  h.dim = 2;
  h.strict = {iv({1, 0}), iv({-1, 0})};
  h.weak = {iv({0, 1})};
  RationalCone c(h);
  EXPECT_TRUE(c.is_empty());
}

TEST(Cone, HullsRoundTrip) {
  std::vector<IntVec> gens{iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1}), iv({1, 1, 1})};
  auto closed = RationalCone::closed_hull(gens, 3);
  EXPECT_EQ(closed.rays().size(), 4u);
  EXPECT_TRUE(closed.contains(iv({2, 1, 1})));
  EXPECT_TRUE(closed.contains(iv({1, 0, 0})));
  auto open = RationalCone::open_hull(gens, 3);
  EXPECT_FALSE(open.contains(iv({1, 0, 0})));
  EXPECT_TRUE(open.contains(iv({2, 1, 1})));
  EXPECT_EQ(open.euler_limit(), -1);
}

TEST(Cone, TriangulationCoversWithSimplices) {
  std::vector<IntVec> gens{iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1}), iv({1, 1, 1})};
  auto cone = RationalCone::closed_hull(gens, 3);
  auto simplices = triangulate(cone);
  EXPECT_EQ(simplices.size(), 2u);
  for (auto s : simplices) EXPECT_EQ(popcount(s), 3u);
}

TEST(Cone, OpenFacesPartitionLatticePoints) {
  HalfSpaces h = orthant(3, false);
  h.strict = {iv({1, 1, -1})};
  RationalCone c(h);
  std::vector<RationalCone> pieces;
  for (const auto& f : c.open_faces()) pieces.push_back(RationalCone::open_hull(c.rays_of(f.rays), 3));
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long z = 0; z <= 4; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        IntVec p = iv({x, y, z});
        int hits = 0;
        for (const auto& piece : pieces) hits += piece.contains(p);
        EXPECT_EQ(hits, c.contains(p) ? 1 : 0) << x << "," << y << "," << z;
      }
}
