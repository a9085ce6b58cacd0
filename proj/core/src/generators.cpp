#include "leraytk/random.hpp"

#include <algorithm>

#include "leraytk/errors.hpp"

namespace leraytk {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream ^ 0x5851f42d4c957f2dULL))) {}

std::uint64_t CounterRng::next() {
  ++counter_;
  return splitmix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

PartitionedComplex random_partitioned_complex(const RandomComplexSpec& spec, std::uint64_t seed,
                                              std::uint64_t stream) {
  if (spec.parts == 0 || spec.part_sizes.size() != spec.parts) {
    throw InvalidArgument("part_sizes must list one size per part");
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw InvalidArgument("density must lie in [0, 1]");
  }
  std::vector<std::vector<VertexId>> parts(spec.parts);
  VertexId next_id = 0;
  for (std::size_t i = 0; i < spec.parts; ++i) {
    if (spec.part_sizes[i] == 0) throw InvalidArgument("part " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < spec.part_sizes[i]; ++j) parts[i].push_back(next_id++);
  }

  CounterRng rng(seed, stream);
  std::vector<Simplex> generators;
  for (VertexId v = 0; v < next_id; ++v) generators.push_back(Simplex{v});

  const std::size_t max_size = std::min(spec.dimension + 1, spec.parts);
  std::size_t budget = kDefaultSimplexGuard;
  for (std::size_t size = 2; size <= max_size; ++size) {
    // Part sets of this size in lexicographic order.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      // Sections over the part set in lexicographic order.
      std::vector<std::size_t> choice(size, 0);
      while (true) {
        if (budget-- == 0) throw GuardExceeded("too many candidate simplices");
        if (rng.bernoulli(spec.density)) {
          std::vector<VertexId> verts;
          for (std::size_t j = 0; j < size; ++j) verts.push_back(parts[pick[j]][choice[j]]);
          generators.push_back(Simplex::from_sorted(std::move(verts)));
        }
        std::size_t j = size;
        while (j > 0 && ++choice[j - 1] == parts[pick[j - 1]].size()) choice[--j] = 0;
        if (j == 0) break;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == spec.parts - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  auto x = SimplicialComplex::from_generators(next_id, std::move(generators));
  return PartitionedComplex(std::move(x), std::move(parts));
}

SimplicialComplex random_complex(std::size_t n, std::size_t dimension, double density,
                                 std::uint64_t seed, std::uint64_t stream) {
  RandomComplexSpec spec{n, std::vector<std::size_t>(n, 1), dimension, density};
  return random_partitioned_complex(spec, seed, stream).complex();
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

RandomComplexSpec random_spec(const InstanceBounds& bounds, std::uint64_t seed) {
  if (bounds.max_parts == 0 || bounds.max_part_size == 0 || bounds.max_vertices == 0) {
    throw InvalidArgument("instance bounds must be positive");
  }
  CounterRng rng(seed, 0);
  RandomComplexSpec spec;
  spec.parts = 1 + rng.below(std::min(bounds.max_parts, bounds.max_vertices));
  std::size_t remaining = bounds.max_vertices - spec.parts;
  for (std::size_t i = 0; i < spec.parts; ++i) {
    const std::size_t extra_cap = std::min(bounds.max_part_size - 1, remaining);
    const std::size_t size = 1 + rng.below(extra_cap + 1);
    remaining -= size - 1;
    spec.part_sizes.push_back(size);
  }
  spec.dimension = 1 + rng.below(std::max<std::size_t>(bounds.max_dimension, 1));
  spec.density = static_cast<double>(1 + rng.below(7)) / 8.0;
  return spec;
}

PartitionedComplex random_instance(const InstanceBounds& bounds, std::uint64_t seed,
                                   std::uint64_t stream) {
  return random_partitioned_complex(random_spec(bounds, seed), seed, stream);
}

std::vector<PartitionedComplex> random_instance_family(const InstanceBounds& bounds,
                                                       std::uint64_t seed, std::size_t count) {
  const RandomComplexSpec spec = random_spec(bounds, seed);
  std::vector<PartitionedComplex> out;
  for (std::size_t s = 1; s <= count; ++s) out.push_back(random_partitioned_complex(spec, seed, s));
  return out;
}

}  // namespace leraytk
