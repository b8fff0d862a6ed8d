#include "bench_common.hpp"

#include "branchtool/asymptotics.hpp"
#include "branchtool/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Perron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = branchtool::adjacency_matrix(bench::random_strong(n, 2 * n, 7));
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::perron(a, true));
}
BENCHMARK(BM_Perron)->RangeMultiplier(4)->Range(8, 512);

void BM_SpectrumSmall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = branchtool::adjacency_matrix(bench::random_strong(n, n, 11));
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::spectrum_small(a));
}
BENCHMARK(BM_SpectrumSmall)->DenseRange(4, 16, 4);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = branchtool::adjacency_matrix(bench::random_strong(n, n, 13));
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::characteristic_polynomial(a));
}
BENCHMARK(BM_CharacteristicPolynomial)->RangeMultiplier(2)->Range(8, 64);

void BM_GraphAnalysis(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 2, 17);
  for (auto _ : state) {
    const branchtool::GraphAnalysis analysis(g);
    benchmark::DoNotOptimize(analysis.branching_ratio(branchtool::NodeId{0}));
  }
}
BENCHMARK(BM_GraphAnalysis)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
