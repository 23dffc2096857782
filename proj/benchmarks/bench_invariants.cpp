#include <benchmark/benchmark.h>

#include "knotinv/epsilon_order.hpp"
#include "knotinv/phi.hpp"
#include "knotinv/upsilon.hpp"

using namespace knotinv;

static void BM_TorusSemigroup(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus_semigroup(p, q));
  }
}
BENCHMARK(BM_TorusSemigroup)->Args({8, 11})->Args({40, 201})->Args({60, 301});

static void BM_PhiDirect(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_lspace(torus_semigroup(p, q)));
  }
}
BENCHMARK(BM_PhiDirect)->Args({8, 11})->Args({40, 201})->Args({60, 301});

static void BM_PhiRecursive(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_torus_recursive(p, q));
  }
}
BENCHMARK(BM_PhiRecursive)->Args({8, 11})->Args({40, 201})->Args({60, 301});

static void BM_UpsilonEnvelope(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  NumericalSemigroup s = torus_semigroup(p, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upsilon_lspace(s));
  }
}
BENCHMARK(BM_UpsilonEnvelope)->Args({8, 11})->Args({20, 99})->Args({40, 201});

static void BM_Apery(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  NumericalSemigroup s = torus_semigroup(p, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_block_decomposition(s, p));
  }
}
BENCHMARK(BM_Apery)->Args({8, 11})->Args({30, 91});

static void BM_TorusClass(benchmark::State& state) {
  long long p = state.range(0), q = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus_class(p, q));
  }
}
BENCHMARK(BM_TorusClass)->Args({8, 11})->Args({40, 201});

BENCHMARK_MAIN();
