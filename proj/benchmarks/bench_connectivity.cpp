#include <benchmark/benchmark.h>

#include "regconn/connectivity.hpp"
#include "regconn/generators.hpp"

namespace {

void BM_FlowConnectivityNevo(benchmark::State& state) {
  const auto graph = regconn::one_skeleton(regconn::nevo_complex(4, static_cast<int>(state.range(0))).first);
  for (auto _ : state) benchmark::DoNotOptimize(regconn::vertex_connectivity(graph, 1));
  state.counters["n"] = graph.ambient_size();
}
BENCHMARK(BM_FlowConnectivityNevo)->DenseRange(3, 9, 2);

void BM_BruteForceConnectivity(benchmark::State& state) {
  const auto graph = regconn::one_skeleton(regconn::random_complex(static_cast<int>(state.range(0)), 1, 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(regconn::vertex_connectivity_bruteforce(graph));
}
BENCHMARK(BM_BruteForceConnectivity)->DenseRange(6, 12, 2);

void BM_DisconnectingSubsets(benchmark::State& state) {
  const auto complex = regconn::prism_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(regconn::disconnecting_subsets(complex));
}
BENCHMARK(BM_DisconnectingSubsets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
