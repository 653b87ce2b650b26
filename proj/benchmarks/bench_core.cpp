#include <benchmark/benchmark.h>

#include <random>

#include "ibncut/hilbert.hpp"
#include "ibncut/ibn.hpp"
#include "ibncut/stableset.hpp"
#include "ibncut/supernormal.hpp"

using namespace ibncut;

namespace {

IntMat random_nonsingular(std::mt19937_64& rng, int n, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  for (;;) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
      IntVec row(n);
      for (int j = 0; j < n; ++j) row[j] = d(rng);
      auto pp = primitive_part(row);
      if (pp.g == 0) break;
      m[i] = pp.w;
    }
    if (determinant(m) != 0) return m;
  }
}

void bm_determinant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int n = static_cast<int>(state.range(0));
  IntMat m = random_nonsingular(rng, n, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(m));
  }
}
BENCHMARK(bm_determinant)->Arg(5)->Arg(10)->Arg(15);

void bm_hilbert_simplicial(benchmark::State& state) {
  std::mt19937_64 rng(2);
  int n = static_cast<int>(state.range(0));
  IntMat m = random_nonsingular(rng, n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_hilbert_basis_simplicial(SimplicialCone{m}));
  }
}
BENCHMARK(bm_hilbert_simplicial)->Arg(3)->Arg(5);

void bm_ibn_round_c7(benchmark::State& state) {
  Configuration cfg = stable_config(Graph::cycle(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ibn_round(cfg));
  }
}
BENCHMARK(bm_ibn_round_c7);

void bm_ibn_round_k5(benchmark::State& state) {
  Configuration cfg = stable_config(Graph::complete(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ibn_round(cfg));
  }
}
BENCHMARK(bm_ibn_round_k5);

void bm_lowerbound_run(benchmark::State& state) {
  Configuration cfg = lowerbound_family(static_cast<int>(state.range(0)));
  IbnCaps caps;
  caps.max_rounds = 12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ibn_run(cfg, caps));
  }
}
BENCHMARK(bm_lowerbound_run)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
