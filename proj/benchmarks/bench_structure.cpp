#include "bench_common.hpp"

#include "branchtool/structure.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SccDecompose(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::scc_decompose(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SccDecompose)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_Upstream(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 2, 5);
  const auto scc = branchtool::scc_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::upstream(g, scc, branchtool::NodeId{0}));
}
BENCHMARK(BM_Upstream)->RangeMultiplier(4)->Range(64, 4096);

void BM_SccPeriod(benchmark::State& state) {
  const auto g = bench::random_strong(static_cast<std::size_t>(state.range(0)), 0, 9);
  const auto scc = branchtool::scc_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::scc_period(g, scc, 0));
}
BENCHMARK(BM_SccPeriod)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
