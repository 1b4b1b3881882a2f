#include <benchmark/benchmark.h>

#include "mints/known_eps.hpp"
#include "mints/search.hpp"

namespace {

void BM_SearchTotalMax(benchmark::State& state) {
  mints::search::SearchConfig config;
  config.mints = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto res = mints::search::search_optimal(config);
    benchmark::DoNotOptimize(res.best_cost);
  }
}
BENCHMARK(BM_SearchTotalMax)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SearchGrandSum(benchmark::State& state) {
  mints::search::SearchConfig config;
  config.mints = static_cast<int>(state.range(0));
  config.cost_kind = mints::CostKind::GrandSum;
  for (auto _ : state) {
    const auto res = mints::search::search_optimal(config);
    benchmark::DoNotOptimize(res.best_cost);
  }
}
BENCHMARK(BM_SearchGrandSum)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Capacity(benchmark::State& state) {
  for (auto _ : state) {
    const auto res = mints::search::capacity_max_mints(state.range(0));
    benchmark::DoNotOptimize(res.max_mints);
  }
}
BENCHMARK(BM_Capacity)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_KnownEpsSearch(benchmark::State& state) {
  for (auto _ : state) {
    const auto res = mints::known_eps::search_known_eps(static_cast<int>(state.range(0)), 2);
    benchmark::DoNotOptimize(res.best_cost);
  }
}
BENCHMARK(BM_KnownEpsSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExtendChain(benchmark::State& state) {
  using mints::search::extend;
  using mints::search::MintVector;
  for (auto _ : state) {
    mints::search::PartialState st;
    auto s1 = extend(st, MintVector{1, 0});
    auto s2 = extend(*s1, MintVector{0, 1});
    auto s3 = extend(*s2, MintVector{2, 1});
    auto s4 = extend(*s3, MintVector{5, 3});
    benchmark::DoNotOptimize(s4->direction_count());
  }
}
BENCHMARK(BM_ExtendChain);

}  // namespace

BENCHMARK_MAIN();
