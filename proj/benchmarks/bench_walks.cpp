#include "bench_common.hpp"

#include "branchtool/walks.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_WalkCountsFibonacci(benchmark::State& state) {
  const auto g = branchtool::parse_edge_list("1 2\n2 1\n2 2\n");
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::walk_counts(g, branchtool::NodeId{0}, length));
}
BENCHMARK(BM_WalkCountsFibonacci)->RangeMultiplier(4)->Range(64, 4096);

void BM_WalkCountsAll(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::walk_counts_all(g, 240));
}
BENCHMARK(BM_WalkCountsAll)->RangeMultiplier(4)->Range(16, 1024);

void BM_BruteForce(benchmark::State& state) {
  const auto g = branchtool::parse_edge_list("1 2\n2 1\n2 2\n");
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::brute_force_walk_count(g, branchtool::NodeId{0}, length));
}
BENCHMARK(BM_BruteForce)->DenseRange(10, 25, 5);

void BM_RatioSequence(benchmark::State& state) {
  const auto g = branchtool::parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n2 6\n5 3\n6 1\n");
  const auto series = branchtool::walk_counts(g, branchtool::NodeId{0}, 240);
  for (auto _ : state) benchmark::DoNotOptimize(branchtool::ratio_sequence(series));
}
BENCHMARK(BM_RatioSequence);

}  // namespace
