#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/oracles.hpp"
#include "nmz/zeta.hpp"

using namespace nmz;
using test::poly;

TEST(Zeta, NodePullbackPushesForwardToZero) {
  auto r = milnor_pullback(poly(2, {{{1, 1}, 1}}), 1);
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.closed_form.is_zero());
  EXPECT_TRUE(r.closed_form.pushforward().is_zero());
}

TEST(Zeta, PowerAtOrigin) {
  auto r = milnor_at_origin(poly(1, {{{3}, 1}}));
  Budget budget;
  auto f = realize(r.closed_form, 7, budget);
  // cubes in F_7^* are 1 and 6
  EXPECT_EQ(f.str(), "q=7 [3 0 0 0 0 3]");
}

TEST(Zeta, NodeAtOrigin) {
  auto r = milnor_at_origin(poly(2, {{{1, 1}, 1}}));
  Budget budget;
  auto f = realize(r.closed_form, 5, budget);
  for (const auto& c : f.counts) EXPECT_EQ(c, Rat(-4));
}

TEST(Zeta, LimitAgreesWithFaceFormula) {
  std::vector<std::pair<SparsePoly, std::size_t>> inputs{
      {poly(2, {{{1, 1}, 1}}), 1},
      {poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}), 1},
      {poly(3, {{{1, 1, 1}, 1}}), 1},
      {poly(2, {{{2, 0}, 1}, {{0, 3}, 1}}), 0},
      {test::worked_example(Partition{3, 0, 0}), 2},
      {test::worked_example(Partition{3, 0, 0}), 0},
      {poly(4, {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}}), 2},
  };
  for (const auto& [g, n1] : inputs) {
    auto r = milnor_pullback(g, n1);
    EXPECT_TRUE(r.consistent) << g.str();
    EXPECT_EQ(r.closed_form, r.from_limit) << g.str();
  }
}

TEST(Zeta, CellsDropWhenLeantSetMissesCoordinatePlanes) {
  auto z = zeta_pullback(test::worked_example(Partition{3, 0, 0}), 2);
  for (const auto& c : z.cells) {
    const auto& planes = z.polyhedron.face(c.compact).coordinate_planes;
    bool covers = std::includes(c.leant.begin(), c.leant.end(), planes.begin(), planes.end());
    EXPECT_EQ(c.kept, covers) << c.label;
    if (!c.kept) EXPECT_TRUE(c.limit.is_zero()) << c.label;
  }
}

TEST(Zeta, Hypotheses) {
  EXPECT_THROW(zeta_pullback(SparsePoly(2, Partition{2, 0, 0}), 1), DomainError);
  EXPECT_THROW(zeta_pullback(poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}), 1), DomainError);
  EXPECT_THROW(zeta_pullback(poly(2, {{{2, 0}, 1}, {{1, 1}, 1}}), 1), DomainError);
  EXPECT_THROW(zeta_pullback(poly(2, {{{1, 1}, 1}}), 3), DomainError);
}
