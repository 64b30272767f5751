#include <benchmark/benchmark.h>

#include "exotic/rat.hpp"

using namespace exotic;

static void IntSqrt(benchmark::State& state) {
  Int n = 1;
  for (long i = 0; i < state.range(0); ++i) {
    n *= 1000003;  // ~6 decimal digits per factor, never a square
  }
  for (auto _ : state) {
    auto r = int_sqrt(n);
    benchmark::DoNotOptimize(r.root.get_mpz_t());
  }
}
BENCHMARK(IntSqrt)->RangeMultiplier(4)->Range(1, 256);

static void RatSqrtOfSquare(benchmark::State& state) {
  Rat base = make_rat(Int("123456789123456789"), Int("987654321987654323"));
  Rat square = base * base;
  for (auto _ : state) {
    auto r = rat_sqrt(square);
    benchmark::DoNotOptimize(r->get_num().get_mpz_t());
  }
}
BENCHMARK(RatSqrtOfSquare);

static void EnumerateRats(benchmark::State& state) {
  for (auto _ : state) {
    auto values = enumerate_rats(state.range(0));
    benchmark::DoNotOptimize(values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EnumerateRats)->RangeMultiplier(2)->Range(8, 128)->Complexity();
