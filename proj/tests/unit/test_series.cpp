#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/linalg.hpp"
#include "nmz/oracles.hpp"
#include "nmz/series.hpp"

using namespace nmz;
using test::iv;

namespace {

struct Case {
  const char* name;
  HalfSpaces h;
  IntVec l, lp;
};

HalfSpaces positive(std::size_t n) {
  HalfSpaces h;
  h.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    h.strict.push_back(e);
  }
  return h;
}

std::vector<Case> cases() {
  std::vector<Case> out;
  {
    HalfSpaces h = positive(1);
    out.push_back({"ray", h, iv({2}), iv({1})});
  }
  out.push_back({"open-quadrant", positive(2), iv({1, 2}), iv({1, 1})});
  {
    HalfSpaces h;
    h.dim = 2;
    h.weak = {iv({1, 0}), iv({-1, 2})};
    out.push_back({"closed-wedge", h, iv({1, 1}), iv({2, 1})});
  }
  {
    HalfSpaces h = positive(2);
    h.weak = {iv({-1, 1})};
    out.push_back({"x1<=x2", h, iv({1, 1}), iv({1, 1})});
  }
  {
    HalfSpaces h = positive(3);
    h.weak = {iv({-1, 0, 1}), iv({0, -1, 1})};
    out.push_back({"x1,x2<=x3", h, iv({0, 0, 1}), iv({1, 1, 1})});
  }
  {
    HalfSpaces h = positive(3);
    h.weak = {iv({-2, 1, 1})};
    out.push_back({"2x1<=x2+x3", h, iv({1, 1, 1}), iv({1, 1, 1})});
  }
  {
    HalfSpaces h = positive(4);
    h.weak = {iv({-1, -1, 1, 2})};
    out.push_back({"x1+x2<=x3+2x4", h, iv({1, 1, 1, 1}), iv({1, 1, 1, 1})});
  }
  {
    HalfSpaces h;
    h.dim = 3;
    h.weak = {iv({1, 0, 0}), iv({0, 1, 0})};
    h.strict = {iv({0, 0, 1}), iv({1, 1, -1})};
    out.push_back({"mixed-3d", h, iv({1, 1, 2}), iv({1, 1, 1})});
  }
  return out;
}

}  // namespace

TEST(Series, ExpansionMatchesEnumeration) {
  for (const auto& c : cases()) {
    RationalCone cone(c.h);
    auto s = cone_series(cone, c.l, c.lp);
    Budget budget(50'000'000);
    EXPECT_EQ(s.expand(8), series_coeff_brute(cone, c.l, c.lp, 8, budget)) << c.name;
  }
}

TEST(Series, LimitEqualsEulerCharacteristic) {
  for (const auto& c : cases()) {
    RationalCone cone(c.h);
    EXPECT_EQ(cone_series(cone, c.l, c.lp).limit(), Laurent(cone.euler_limit())) << c.name;
  }
}

TEST(Series, RelativelyOpenConesLimitToSignedDimension) {
  std::vector<std::vector<IntVec>> gens{{iv({1, 0}), iv({1, 2})},
                                        {iv({1, 1, 7})},
                                        {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 3})},
                                        {iv({1, 2, 0}), iv({2, 1, 0})}};
  for (const auto& g : gens) {
    auto cone = RationalCone::open_hull(g, g.front().size());
    const long sign = cone.dimension() % 2 ? -1 : 1;
    EXPECT_EQ(open_cone_limit(cone, IntVec(g.front().size(), 1), IntVec(g.front().size(), 1)), sign);
  }
}

TEST(Series, UnimodularPiecesPartitionTheCone) {
  auto cone = RationalCone::open_hull({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 3})}, 3);
  auto cells = decompose_open(cone);
  std::vector<RationalCone> pieces;
  for (const auto& c : cells) {
    EXPECT_EQ(linalg::saturated_basis(c.gens, 3).size(), c.gens.size());
    pieces.push_back(RationalCone::open_hull(c.gens, 3));
  }
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long z = 0; z <= 9; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        IntVec p = iv({x, y, z});
        int hits = 0;
        for (const auto& piece : pieces) hits += piece.contains(p);
        EXPECT_EQ(hits, cone.contains(p) ? 1 : 0);
      }
}

TEST(Series, DecompositionRespectsCap) {
  auto cone = RationalCone::open_hull({iv({1, 0}), iv({1, 997})}, 2);
  EXPECT_THROW(decompose_open(cone, 3), BudgetExceeded);
}

TEST(Series, RejectsNonPositiveForms) {
  HalfSpaces h;
  h.dim = 2;
  h.weak = {iv({1, 0}), iv({0, 1})};
  RationalCone cone(h);
  EXPECT_THROW(cone_series(cone, iv({1, 0}), iv({1, 1})), DomainError);
  EXPECT_THROW(cone_series(cone, iv({1, 1}), iv({1, -1})), DomainError);
}

TEST(Series, GeometricFactorAlgebra) {
  LaurentSeries s;
  s.add_term({{-1, 1}}, Laurent(1));
  EXPECT_EQ(s.limit(), Laurent(-1));
  auto t = s.mul_geometric(-2, 1);
  EXPECT_EQ(t.limit(), Laurent(1));
  auto e = t.expand(3);
  EXPECT_TRUE(e[0].is_zero());
  EXPECT_TRUE(e[1].is_zero());
  EXPECT_EQ(e[2], Laurent::L(-3));
  EXPECT_EQ(to_string(FactorKey{{-1, 1}, {-2, 3}}), "p(-1,1)*p(-2,3)");
}
