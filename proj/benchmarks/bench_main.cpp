#include <benchmark/benchmark.h>

#include "nmz/checks.hpp"
#include "nmz/newton.hpp"
#include "nmz/oracles.hpp"
#include "nmz/series.hpp"
#include "nmz/strata.hpp"
#include "nmz/zeta.hpp"

namespace {

using namespace nmz;

SparsePoly poly(Partition p, const std::vector<std::pair<Exponent, long>>& terms) {
  SparsePoly f(p.size(), p);
  for (const auto& [e, c] : terms) f.add_term(e, Rat(c));
  return f;
}

SparsePoly worked() { return poly(Partition{2, 0, 1}, {{{2, 0, 2}, 1}, {{1, 1, 2}, 1}, {{0, 3, 3}, 1}}); }

void BM_NewtonPolyhedron(benchmark::State& state) {
  auto g = worked();
  for (auto _ : state) benchmark::DoNotOptimize(newton_polyhedron(g));
}
BENCHMARK(BM_NewtonPolyhedron);

void BM_CanonicalPartition(benchmark::State& state) {
  auto P = newton_polyhedron(worked());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_partition(P, 2));
}
BENCHMARK(BM_CanonicalPartition);

// Stellar splitting cost grows with the index of the simplicial cone.
void BM_ConeSeries(benchmark::State& state) {
  const long k = state.range(0);
  auto cone = RationalCone::open_hull({IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, 1, k}}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cone_series(cone, IntVec{1, 1, 1}, IntVec{1, 1, 1}));
  state.SetComplexityN(k);
}
BENCHMARK(BM_ConeSeries)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_JetCount(benchmark::State& state) {
  auto g = poly(Partition{3, 0, 0}, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}});
  for (auto _ : state) {
    Budget budget(1'000'000'000);
    benchmark::DoNotOptimize(jet_count(g, {1, 1, 1}, state.range(0), 3, budget));
  }
}
BENCHMARK(BM_JetCount)->DenseRange(2, 4);

void BM_MilnorPullback(benchmark::State& state) {
  auto g = poly(Partition{3, 0, 0}, {{{2, 0, 2}, 1}, {{1, 1, 2}, 1}, {{0, 3, 3}, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(milnor_pullback(g, 2));
}
BENCHMARK(BM_MilnorPullback)->Unit(benchmark::kMillisecond);

void BM_ExactZeta(benchmark::State& state) {
  auto F = poly(Partition{2, 2, 1}, {{{1, 1, 1, 1, 0}, 1}, {{0, 0, 0, 0, 2}, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(exact_zeta_pullback(F, 2));
}
BENCHMARK(BM_ExactZeta)->Unit(benchmark::kMillisecond);

void BM_ConjectureCheck(benchmark::State& state) {
  auto F = poly(Partition{1, 1, 1}, {{{1, 1, 0}, 1}, {{0, 0, 3}, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_check(F));
}
BENCHMARK(BM_ConjectureCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
