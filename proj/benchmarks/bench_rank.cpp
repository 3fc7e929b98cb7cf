#include <benchmark/benchmark.h>

#include <random>

#include "regconn/gf_matrix.hpp"

namespace {

regconn::GfMatrix random_matrix(std::size_t size, int prime, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  regconn::GfMatrix m(size, size, regconn::FieldSpec(prime));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % prime));
  }
  return m;
}

void BM_RankGf2(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankGf2)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_RankGf3(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankGf3)->RangeMultiplier(2)->Range(64, 512)->Complexity();

}  // namespace
