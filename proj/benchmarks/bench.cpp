#include <benchmark/benchmark.h>

#include "liegc/chevalley.hpp"
#include "liegc/classify.hpp"
#include "liegc/moduli.hpp"
#include "liegc/rootsys.hpp"

using namespace liegc;

static void BM_BuildRootSystem(benchmark::State& state) {
  char series = "ABCDFG"[state.range(0)];
  int rank = int(state.range(1));
  for (auto _ : state) {
    RootSystem rs = build_root_system(series, rank);
    benchmark::DoNotOptimize(rs.num_roots());
  }
}
BENCHMARK(BM_BuildRootSystem)->Args({0, 3})->Args({1, 4})->Args({5, 2});

static void BM_EnumerateClosedSubsets(benchmark::State& state) {
  RootSystem rs = build_root_system('A', int(state.range(0)));
  RootSubset none = empty_subset(rs);
  for (auto _ : state) {
    auto subs = enumerate_closed_subsets(rs, none);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_EnumerateClosedSubsets)->Arg(2)->Arg(3);

static void BM_BuildChevalley(benchmark::State& state) {
  char series = "ABCDFG"[state.range(0)];
  RootSystem rs = build_root_system(series, int(state.range(1)));
  for (auto _ : state) {
    ChevalleyAlgebra alg = build_chevalley(rs);
    benchmark::DoNotOptimize(alg.dim);
  }
}
BENCHMARK(BM_BuildChevalley)->Args({0, 3})->Args({5, 2});

static void BM_Kernel(benchmark::State& state) {
  int n = int(state.range(0));
  Mat m(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      m.at(i, j) = GaussRat(Rational((i * 7 + j * 3) % 5 - 2, (i + j) % 3 + 1));
  for (auto _ : state) {
    Mat k = kernel(m);
    benchmark::DoNotOptimize(k.rows());
  }
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(16)->Arg(32);

static void BM_ModuliGraphA2(benchmark::State& state) {
  RootSystem rs = build_root_system('A', 2);
  RootSubset cartan = empty_subset(rs);
  for (auto _ : state) {
    ModuliGraph g = build_moduli_graph(rs, cartan);
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_ModuliGraphA2);

BENCHMARK_MAIN();
