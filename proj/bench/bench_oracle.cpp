// Serial reference search vs the OpenMP driver on the same instances.

#include <benchmark/benchmark.h>

#include "cyclic_chroma/oracle.hpp"

namespace {

using cyclic_chroma::Execution;
using cyclic_chroma::Mode;

template <Execution E>
void BM_CountCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_chroma::count(n, t, Mode::cyclic_interval, E));
  }
}

template <Execution E>
void BM_ThetaBySearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_chroma::theta_by_search(n, Mode::cyclic_interval, E));
  }
}

}  // namespace

BENCHMARK(BM_CountCyclic<Execution::serial>)->Args({12, 3})->Args({14, 4})->Args({14, 6});
BENCHMARK(BM_CountCyclic<Execution::parallel>)->Args({12, 3})->Args({14, 4})->Args({14, 6});
BENCHMARK(BM_ThetaBySearch<Execution::serial>)->Arg(10)->Arg(12)->Arg(14);
BENCHMARK(BM_ThetaBySearch<Execution::parallel>)->Arg(10)->Arg(12)->Arg(14);

BENCHMARK_MAIN();
