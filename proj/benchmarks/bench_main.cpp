#include <benchmark/benchmark.h>

#include <random>

#include "zb/forcing.hpp"
#include "zb/grid_theory.hpp"
#include "zb/solver.hpp"
#include "zb/staircase.hpp"

namespace {

void BM_ClosureGrid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  zb::Graph g = zb::grid_graph(n, n);
  zb::VertexSet black(g.vertex_count());
  for (int x = 1; x <= n; ++x) black.insert(g.grid()->index(x, 1));
  for (auto _ : state) benchmark::DoNotOptimize(zb::closure(g, black));
}
BENCHMARK(BM_ClosureGrid)->Arg(8)->Arg(32)->Arg(128);

void BM_ClosureMask(benchmark::State& state) {
  zb::Graph g = zb::grid_graph(8, 8);
  std::uint64_t black = 0xff;
  for (auto _ : state) benchmark::DoNotOptimize(zb::closure_mask(g, black));
}
BENCHMARK(BM_ClosureMask);

void BM_SolveGrid(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int n = static_cast<int>(state.range(1));
  zb::SearchBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(zb::min_blocking_grid(m, n, budget));
}
BENCHMARK(BM_SolveGrid)->Args({3, 6})->Args({4, 7})->Args({5, 5});

void BM_SolvePlain(benchmark::State& state) {
  zb::Graph g = zb::grid_graph(3, static_cast<int>(state.range(0)));
  zb::SearchBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(zb::min_blocking_number(g, budget));
}
BENCHMARK(BM_SolvePlain)->Arg(4)->Arg(6);

void BM_FormulaSweep(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (int m = 2; m <= 500; ++m) {
      for (int n = m; n <= 500; ++n) sum += zb::blocking_number_formula(m, n);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_FormulaSweep);

void BM_BuildWitness(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zb::build_witness(n / 3, n));
}
BENCHMARK(BM_BuildWitness)->Arg(30)->Arg(100);

void BM_Certify(benchmark::State& state) {
  zb::Witness w = zb::build_witness(6, 20);
  for (auto _ : state) benchmark::DoNotOptimize(zb::certify(6, 20, w.white));
}
BENCHMARK(BM_Certify);

}  // namespace
BENCHMARK_MAIN();
