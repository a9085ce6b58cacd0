#include <benchmark/benchmark.h>

#include "leraytk/helly.hpp"

using namespace leraytk;

static void BM_HellyBoxes(benchmark::State& state) {
  const auto fam = random_fr_family(2, static_cast<std::size_t>(state.range(0)), 1, 7);
  HellyOptions options;
  options.definition_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(helly_number(fam.pieces, options));
}
BENCHMARK(BM_HellyBoxes)->DenseRange(4, 16, 4);

static void BM_HellyDefinitionScan(benchmark::State& state) {
  const auto fam = random_fr_family(2, static_cast<std::size_t>(state.range(0)), 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(helly_number(fam.pieces));
}
BENCHMARK(BM_HellyDefinitionScan)->DenseRange(4, 12, 4);

static void BM_AmentaChain(benchmark::State& state) {
  const auto fam = random_fr_family(2, static_cast<std::size_t>(state.range(0)), 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(check_amenta(fam));
}
BENCHMARK(BM_AmentaChain)->DenseRange(3, 7, 2);
