#include <benchmark/benchmark.h>

#include "exotic/gap.hpp"
#include "exotic/search.hpp"

using namespace exotic;

static void IntegerSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto outcome = search_integer_exotic(state.range(0), static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(outcome.near_misses.data());
  }
}
BENCHMARK(IntegerSearch)
    ->Args({10'000, 1})
    ->Args({100'000, 1})
    ->Args({100'000, 2})
    ->Args({1'000'000, 2});

static void RationalSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto triples = search_rational_exotic(state.range(0), static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(triples.data());
  }
}
BENCHMARK(RationalSearch)->Args({10, 1})->Args({20, 1})->Args({20, 2});

static void Case1Scan(benchmark::State& state) {
  for (auto _ : state) {
    auto hits = case1_scan(state.range(0));
    benchmark::DoNotOptimize(hits.data());
  }
}
BENCHMARK(Case1Scan)->Arg(25)->Arg(50);

static void GapSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto result = gap_sweep(state.range(0));
    benchmark::DoNotOptimize(result.reports.data());
  }
}
BENCHMARK(GapSweep)->Arg(10'000)->Arg(100'000);
