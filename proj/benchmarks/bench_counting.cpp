#include <benchmark/benchmark.h>

#include "sgcount/counting.hpp"
#include "sgcount/grid.hpp"
#include "sgcount/series.hpp"

using namespace sgcount;

namespace {

void BM_Closed(benchmark::State& state) {
  const CountQuery q{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)),
                     GrowthSpec::power(3)};
  for (auto _ : state) benchmark::DoNotOptimize(count_nested_closed(q));
}

void BM_Recursion(benchmark::State& state) {
  const CountQuery q{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)),
                     GrowthSpec::power(3)};
  for (auto _ : state) benchmark::DoNotOptimize(count_nested_recursion(q));
}

void BM_GenFun(benchmark::State& state) {
  const auto d = static_cast<std::uint32_t>(state.range(0));
  const auto mu = static_cast<std::uint32_t>(state.range(1));
  const GrowthSpec g = GrowthSpec::power(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_via_genfun(g, d, mu, CountKind::Nested));
}

void BM_GridOracle(benchmark::State& state) {
  const GridSpec spec{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)),
                      NodeFamilyId::Chebyshev1, GrowthSpec::power(3), true};
  for (auto _ : state) benchmark::DoNotOptimize(grid_cardinality_oracle(spec));
}

}  // namespace

BENCHMARK(BM_Closed)->Args({3, 2})->Args({5, 8})->Args({10, 20})->Args({40, 60});
BENCHMARK(BM_Recursion)->Args({3, 2})->Args({5, 8})->Args({10, 20})->Args({40, 60});
BENCHMARK(BM_GenFun)->Args({3, 2})->Args({5, 8})->Args({10, 20})->Args({40, 60});
BENCHMARK(BM_GridOracle)->Args({2, 2})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
