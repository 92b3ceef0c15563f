#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/oracles.hpp"

using namespace nmz;
using test::poly;

TEST(Oracles, JetsOfNodeAtWeightOne) {
  Budget budget;
  auto xy = poly(2, {{{1, 1}, 1}});
  // x = c1 t + c2 t^2, y likewise, c1 c1' != 0: 2*3*2*3 = 36 jets, all of order 2.
  auto jc = jet_count(xy, {1, 1}, 2, 3, budget);
  EXPECT_EQ(jc.total, Int(36));
  EXPECT_EQ(jc.by_ac.at(1), Rat(18));
  EXPECT_EQ(jc.by_ac.at(2), Rat(18));
  EXPECT_EQ(jet_count(xy, {3, 1}, 2, 3, budget).total, Int(0));
}

TEST(Oracles, SquareRootTable) {
  Budget budget;
  auto f = count_torus_fiber(poly(1, {{{2}, 1}}), 7, budget);
  // squares in F_7^*: 1, 2, 4
  EXPECT_EQ(f.str(), "q=7 [2 2 0 2 0 0]");
  EXPECT_EQ(f.total(), Rat(6));
  EXPECT_EQ(count_torus_zero(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}), 5, budget), Int(4));
}

TEST(Oracles, BudgetIsEnforced) {
  Budget budget(10);
  EXPECT_THROW(count_torus_fiber(poly(3, {{{1, 1, 1}, 1}}), 5, budget), BudgetExceeded);
}

TEST(Oracles, ProbeFindsSingularFace) {
  Budget budget;
  // (x + y)^2 is singular along x = -y in the torus.
  auto bad = poly(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
  auto v = nondegeneracy_probe({{"edge", bad}}, {3, 5}, budget);
  EXPECT_TRUE(v.falsified);
  EXPECT_EQ(v.face, "edge");
  auto ok = nondegeneracy_probe({{"edge", poly(2, {{{1, 1}, 1}, {{0, 3}, 1}})}}, {3, 5, 7}, budget);
  EXPECT_FALSE(ok.falsified);
}

TEST(Oracles, ProbeSkipsPrimesDividingDenominators) {
  Budget budget;
  auto p = SparsePoly::from_terms(2, Partition{2, 0, 0}, {{{1, 1}, Rat(1, 3)}, {{0, 2}, Rat(1)}});
  auto v = nondegeneracy_probe({{"f", p}}, {2, 3, 5}, budget);
  EXPECT_EQ(v.skipped, (std::vector<std::int64_t>{3}));
}

TEST(Oracles, PartialDerivative) {
  auto p = poly(2, {{{2, 1}, 3}, {{0, 4}, 1}});
  auto d = partial_derivative(p, 0);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.coefficient({1, 1}), Rat(6));
}

TEST(Oracles, AllJetsIncludeDeepCoordinates) {
  Budget budget;
  auto xy = poly(2, {{{1, 1}, 1}});
  // m = 1: x(0) free, y(0) = 0, ord(xy) = 1 needs x(0) != 0 and y_1 != 0.
  auto jc = jet_count_all(xy, 1, 1, 3, budget);
  EXPECT_EQ(jc.total, Int(2 * 3 * 2));
}
