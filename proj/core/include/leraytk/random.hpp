#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leraytk/graph.hpp"
#include "leraytk/partitioned.hpp"

namespace leraytk {

// Counter-based generator: draw n of stream s under seed k is
// splitmix64(key(k, s) + (n + 1) * golden), a pure function of (k, s, n).
// Uniform doubles take the top 53 bits; bounded integers use rejection, so
// the sequence is identical on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  double uniform01();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  bool bernoulli(double p) { return uniform01() < p; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

struct RandomComplexSpec {
  std::size_t parts = 1;
  std::vector<std::size_t> part_sizes;  // one entry per part
  std::size_t dimension = 1;
  double density = 0.5;
};

// Vertices are laid out part by part. Every vertex is a 0-simplex; each
// candidate cross-part simplex of dimension 1..spec.dimension (visited by
// part set, then lexicographically) is kept with probability `density`,
// and the result is closed downward.
PartitionedComplex random_partitioned_complex(const RandomComplexSpec& spec, std::uint64_t seed,
                                              std::uint64_t stream = 0);

// All parts singletons: an arbitrary complex on n vertices.
SimplicialComplex random_complex(std::size_t n, std::size_t dimension, double density,
                                 std::uint64_t seed, std::uint64_t stream = 0);

// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream = 0);

// Bounds for batch instances drawn from a single seed.
struct InstanceBounds {
  std::size_t max_parts = 4;
  std::size_t max_part_size = 3;
  std::size_t max_dimension = 2;
  std::size_t max_vertices = 12;
};

// Draws the shape (part count, part sizes, dimension, density in eighths)
// from stream 0 of `seed`, then the complex from `stream`.
RandomComplexSpec random_spec(const InstanceBounds& bounds, std::uint64_t seed);
PartitionedComplex random_instance(const InstanceBounds& bounds, std::uint64_t seed,
                                   std::uint64_t stream = 1);

// `count` complexes on one random part structure (streams 1..count).
std::vector<PartitionedComplex> random_instance_family(const InstanceBounds& bounds,
                                                       std::uint64_t seed, std::size_t count);

}  // namespace leraytk
