#include <benchmark/benchmark.h>

#include "regconn/generators.hpp"
#include "regconn/regularity.hpp"

namespace {

void BM_HochsterRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto complex = regconn::random_complex(n, 3, 0.5, 11);
  const regconn::EnumerationLimits limits{regconn::kDefaultEnumerationCap,
                                          static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(regconn::hochster_table(complex, regconn::FieldSpec(2), limits));
  }
}
BENCHMARK(BM_HochsterRandom)
    ->ArgsProduct({{8, 10, 12}, {1, 0}})
    ->Unit(benchmark::kMillisecond);

void BM_HochsterNevo(benchmark::State& state) {
  const auto complex = regconn::nevo_complex(3, static_cast<int>(state.range(0))).first;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regconn::hochster_table(complex, regconn::FieldSpec(2)));
  }
  state.counters["n"] = complex.vertex_count();
}
BENCHMARK(BM_HochsterNevo)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_RegularityGf3(benchmark::State& state) {
  const auto complex = regconn::cross_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(regconn::regularity(complex, regconn::FieldSpec(3)));
  }
}
BENCHMARK(BM_RegularityGf3)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
