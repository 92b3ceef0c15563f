#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nmz/strata.hpp"

using namespace nmz;
using test::poly;

namespace {

// T^m coefficients of the exact series against a census of all m-jets.
void expect_matches_census(const SparsePoly& g, std::size_t n1, long max_m, std::int64_t q) {
  auto ez = exact_zeta_pullback(g, n1);
  auto coeffs = ez.z.expand(max_m);
  Budget budget(200'000'000);
  for (long m = 1; m <= max_m; ++m) {
    FiberCounts predicted(q);
    if (!coeffs[static_cast<std::size_t>(m)].is_zero())
      predicted = realize(coeffs[static_cast<std::size_t>(m)].with_base(Base::AffineBlock).pushforward(), q, budget);
    FiberCounts census = jet_count_all(g, n1, m, q, budget).by_ac;
    census *= Laurent::L(-static_cast<long>(g.n_vars()) * m).evaluate(q);
    EXPECT_EQ(predicted, census) << g.str() << " m=" << m << " q=" << q;
  }
}

}  // namespace

TEST(Strata, NodeMatchesCensus) {
  expect_matches_census(poly(2, {{{1, 1}, 1}}), 1, 3, 3);
  expect_matches_census(poly(2, {{{1, 1}, 1}}), 0, 3, 2);
}

TEST(Strata, NodePlusSquareMatchesCensus) {
  auto F = poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}});
  expect_matches_census(F, 1, 2, 3);
  expect_matches_census(F, 1, 3, 2);
}

TEST(Strata, CuspMatchesCensus) { expect_matches_census(poly(2, {{{2, 0}, 1}, {{0, 3}, 1}}), 0, 4, 3); }

TEST(Strata, TripleProductMatchesCensus) { expect_matches_census(poly(3, {{{1, 1, 1}, 1}}), 1, 3, 2); }

TEST(Strata, WorkedExampleMatchesCensus) { expect_matches_census(test::worked_example(Partition{3, 0, 0}), 2, 4, 2); }

TEST(Strata, NodePlusSquareMilnorFiber) {
  auto F = poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}});
  auto S = exact_milnor_pullback(exact_zeta_pullback(F, 1)).pushforward();
  auto expected = hypersurface_class(poly(3, {{{0, 0, 2}, 1}}), 1, Base::Torus, std::nullopt) * Laurent::L();
  EXPECT_EQ(S, expected);
}

TEST(Strata, InitialFormsCollected) {
  auto F = poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}});
  auto forms = initial_forms(exact_zeta_pullback(F, 1));
  EXPECT_FALSE(forms.empty());
  for (const auto& f : forms) EXPECT_GE(f.poly.size(), 2u);
}
