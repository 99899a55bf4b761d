#include <benchmark/benchmark.h>

#include <cstdint>

#include "eggdrop/eggdrop.hpp"

namespace {

constexpr std::uint64_t kBigN = 1000000000000000000ULL;

void BM_Analytic(benchmark::State& state) {
  const eggdrop::ProblemInstance p{kBigN, static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::solve_analytic(p));
}
BENCHMARK(BM_Analytic)->DenseRange(2, 10, 4)->Arg(16)->Arg(32)->Arg(59);

void BM_BinomialBsearch(benchmark::State& state) {
  const eggdrop::ProblemInstance p{kBigN, static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::solve_binomial_bsearch(p));
}
BENCHMARK(BM_BinomialBsearch)->DenseRange(2, 10, 4)->Arg(16)->Arg(32)->Arg(59);

// Worst case for the O(K log N) baseline is K just below log2 N.
void BM_AnalyticVsFloors(benchmark::State& state) {
  const std::uint64_t n = std::uint64_t{1} << state.range(0);
  const eggdrop::ProblemInstance p{n, static_cast<std::uint32_t>(state.range(0) / 2)};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::solve_analytic(p));
}
BENCHMARK(BM_AnalyticVsFloors)->DenseRange(8, 62, 6);

void BM_DpCapacity(benchmark::State& state) {
  const eggdrop::ProblemInstance p{static_cast<std::uint64_t>(state.range(0)), 4};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::solve_dp_capacity(p));
}
BENCHMARK(BM_DpCapacity)->RangeMultiplier(100)->Range(100, 100000000);

void BM_DpSlow(benchmark::State& state) {
  const eggdrop::ProblemInstance p{static_cast<std::uint64_t>(state.range(0)), 4};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::solve_dp_slow(p));
}
BENCHMARK(BM_DpSlow)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_MapPolicyTree(benchmark::State& state) {
  const eggdrop::ProblemInstance p{static_cast<std::uint64_t>(state.range(0)), 3};
  for (auto _ : state) benchmark::DoNotOptimize(eggdrop::map_policy_tree(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MapPolicyTree)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
