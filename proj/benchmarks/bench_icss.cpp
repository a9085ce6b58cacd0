#include <benchmark/benchmark.h>

#include "leraytk/icss.hpp"
#include "leraytk/random.hpp"

using namespace leraytk;

static void BM_E1PageRandom(benchmark::State& state) {
  const auto px = random_instance({4, 3, 2, 12}, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e1_page(px));
}
BENCHMARK(BM_E1PageRandom)->Arg(1)->Arg(5)->Arg(9);

static void BM_E1PageExtremal(benchmark::State& state) {
  const auto px = extremal_example(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e1_page(px));
}
BENCHMARK(BM_E1PageExtremal)->DenseRange(2, 3);

// Orbit enumeration on M_k against the section construction.
static void BM_AltOrbits(benchmark::State& state) {
  const auto px = random_instance({3, 3, 2, 9}, 4);
  const auto m = multiple_point_complex(px, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alt_chain_complex(m));
}
BENCHMARK(BM_AltOrbits)->DenseRange(2, 4);

static void BM_AltSections(benchmark::State& state) {
  const auto px = random_instance({3, 3, 2, 9}, 4);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alt_chain_complex_from_sections(px, k));
}
BENCHMARK(BM_AltSections)->DenseRange(2, 4);
