#include <benchmark/benchmark.h>

#include "leraytk/leray.hpp"
#include "leraytk/partitioned.hpp"
#include "leraytk/random.hpp"

using namespace leraytk;

static void BM_LerayDefinition(benchmark::State& state) {
  const auto x = random_complex(static_cast<std::size_t>(state.range(0)), 2, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(leray_by_definition(x));
}
BENCHMARK(BM_LerayDefinition)->DenseRange(6, 12, 2);

static void BM_LerayLinks(benchmark::State& state) {
  const auto x = random_complex(static_cast<std::size_t>(state.range(0)), 2, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(leray_by_links(x));
}
BENCHMARK(BM_LerayLinks)->DenseRange(6, 12, 2);

static void BM_ExtremalImageLeray(benchmark::State& state) {
  const auto px = extremal_example(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)));
  const auto y = project(px);
  for (auto _ : state) benchmark::DoNotOptimize(leray_number(y));
}
BENCHMARK(BM_ExtremalImageLeray)->Args({2, 2})->Args({2, 3})->Args({3, 2});
