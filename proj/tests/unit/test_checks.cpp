#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/checks.hpp"

using namespace nmz;
using test::poly;

TEST(Vanishing, BalancedInputsVanish) {
  std::vector<SparsePoly> inputs{
      poly(Partition{1, 1, 0}, {{{1, 1}, 1}}),
      poly(Partition{2, 1, 0}, {{{1, 1, 2}, 1}}),
      poly(Partition{1, 1, 1}, {{{1, 1, 1}, 1}}),
      poly(Partition{1, 1, 0}, {{{2, 2}, 1}}),
      poly(Partition{2, 2, 0}, {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}}),
  };
  for (const auto& g : inputs) {
    auto r = vanishing_check(g);
    EXPECT_EQ(r.verdict, VanishingVerdict::Vanishes) << g.str() << " " << r.reason;
    EXPECT_TRUE(r.value.is_zero());
    EXPECT_TRUE(r.exact_value.is_zero());
    for (const auto& f : r.realized)
      for (const auto& c : f.counts) EXPECT_EQ(c, Rat(0));
  }
}

TEST(Vanishing, TripleProductReportsZeroThirdBlock) {
  auto r = vanishing_check(poly(Partition{1, 1, 1}, {{{1, 1, 1}, 1}}));
  ASSERT_TRUE(r.h_side_zero);
  EXPECT_TRUE(*r.h_side_zero);
}

TEST(Vanishing, UnbalancedFails) {
  auto r = vanishing_check(poly(Partition{1, 1, 0}, {{{2, 1}, 1}}));
  EXPECT_EQ(r.verdict, VanishingVerdict::HypothesisFail);
  EXPECT_NE(r.reason.find("(2,1)"), std::string::npos);
}

TEST(Vanishing, DegenerateFails) {
  // (x1 y1 + x2 y2)^2 has a singular compact face
  auto g = poly(Partition{2, 2, 0}, {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}});
  auto r = vanishing_check(g * g);
  EXPECT_EQ(r.verdict, VanishingVerdict::HypothesisFail);
  EXPECT_NE(r.reason.find("nondegenerate"), std::string::npos);
}

TEST(Conjecture, InstancesHold) {
  std::vector<SparsePoly> inputs{
      poly(Partition{1, 1, 1}, {{{1, 1, 1}, 1}}),
      poly(Partition{1, 1, 1}, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}),
      poly(Partition{1, 1, 1}, {{{1, 1, 0}, 1}, {{0, 0, 3}, 1}}),
      poly(Partition{2, 2, 1}, {{{1, 1, 1, 1, 0}, 1}, {{0, 0, 0, 0, 2}, 1}}),
  };
  for (const auto& F : inputs) {
    auto r = conjecture_check(F);
    EXPECT_EQ(r.exit_code(), 0) << F.str() << " " << r.reason;
    EXPECT_EQ(r.verdict, ConjectureVerdict::SymbolicEqual) << F.str();
    for (const auto& f : r.fibers) EXPECT_TRUE(f.equal);
  }
}

TEST(Conjecture, RightHandSideIsShiftedOriginFiber) {
  auto r = conjecture_check(poly(Partition{1, 1, 1}, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}));
  ASSERT_FALSE(r.fibers.empty());
  const auto& f = r.fibers.front();
  // L * #{z^2 = t}: q times 2 or 0
  for (std::int64_t t = 1; t < f.q; ++t) {
    bool square = false;
    for (std::int64_t z = 1; z < f.q; ++z) square = square || (z * z) % f.q == t;
    EXPECT_EQ(f.rhs.at(t), Rat(square ? 2 * f.q : 0));
  }
}

TEST(Conjecture, FaceFormulaMissesDeepArcs) {
  auto r = conjecture_check(poly(Partition{1, 1, 1}, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}));
  EXPECT_TRUE(r.face_formula.is_zero());
  EXPECT_FALSE(r.face_formula_symbolic_equal);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Conjecture, UnbalancedExitsOne) {
  auto r = conjecture_check(poly(Partition{1, 1, 0}, {{{2, 1}, 1}}));
  EXPECT_EQ(r.verdict, ConjectureVerdict::HypothesisFail);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(JetForm, NodeAndSquare) {
  Budget budget(500'000'000);
  for (const auto& g : {poly(2, {{{1, 1}, 1}}), poly(1, {{{2}, 1}})}) {
    auto rep = jet_form_check(g, {2, 3}, 3, 3, 2, 1'000'000, budget);
    EXPECT_FALSE(rep.cases.empty());
    EXPECT_TRUE(rep.all_ok()) << g.str();
  }
}

TEST(Checklist, ReportsEveryLine) {
  auto list = hypothesis_checklist(test::worked_example());
  EXPECT_EQ(list.size(), 6u);
  auto bad = first_failure(list);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->name, "weight (1,-1,0) degree zero");
}
