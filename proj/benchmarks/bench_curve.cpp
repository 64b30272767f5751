#include <benchmark/benchmark.h>

#include "exotic/family.hpp"

using namespace exotic;

static void ScalarMul(benchmark::State& state) {
  const CurvePoint generator = e2_generator();
  for (auto _ : state) {
    CurvePoint p = scalar_mul(state.range(0), generator);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(ScalarMul)->RangeMultiplier(2)->Range(2, 64);

static void ToTriple(benchmark::State& state) {
  // Coordinate size grows quadratically in k, so this tracks the cost of
  // verification on large certificates.
  const CurvePoint point = scalar_mul(state.range(0), e2_generator());
  for (auto _ : state) {
    auto triple = to_triple(point);
    benchmark::DoNotOptimize(&triple);
  }
}
BENCHMARK(ToTriple)->RangeMultiplier(2)->Range(2, 32);

static void GenerateFamily(benchmark::State& state) {
  for (auto _ : state) {
    auto family = generate_family(state.range(0));
    benchmark::DoNotOptimize(family.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GenerateFamily)->RangeMultiplier(2)->Range(2, 32)->Complexity();
