#include <benchmark/benchmark.h>

#include "leraytk/homology.hpp"
#include "leraytk/integer_matrix.hpp"
#include "leraytk/random.hpp"

using namespace leraytk;

static void BM_BoundarySphereBetti(benchmark::State& state) {
  const auto x = boundary_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(x));
}
BENCHMARK(BM_BoundarySphereBetti)->DenseRange(4, 12, 2);

static void BM_RandomComplexBetti(benchmark::State& state) {
  const auto x = random_complex(static_cast<std::size_t>(state.range(0)), 3, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(x));
}
BENCHMARK(BM_RandomComplexBetti)->DenseRange(8, 16, 4);

// The two rank routines on the same boundary matrix.
static void BM_RankDense(benchmark::State& state) {
  const auto chains = boundary_matrices(boundary_complex(static_cast<std::size_t>(state.range(0))));
  const auto& d = chains.boundary(2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_dense_bareiss(d));
}
BENCHMARK(BM_RankDense)->DenseRange(6, 10, 2);

static void BM_RankSparse(benchmark::State& state) {
  const auto chains = boundary_matrices(boundary_complex(static_cast<std::size_t>(state.range(0))));
  const auto& d = chains.boundary(2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_sparse_fraction_free(d));
}
BENCHMARK(BM_RankSparse)->DenseRange(6, 10, 2);
