#pragma once

#include <cstdint>
#include <vector>

#include "leraytk/complex.hpp"
#include "leraytk/partitioned.hpp"
#include "leraytk/random.hpp"

namespace fixtures {

inline leraytk::SimplicialComplex hollow_triangle() {
  return leraytk::make_complex({{0, 1}, {1, 2}, {0, 2}});
}

inline leraytk::SimplicialComplex solid_triangle() { return leraytk::make_complex({{0, 1, 2}}); }

inline leraytk::SimplicialComplex two_points() { return leraytk::make_complex({{0}, {1}}); }

// Two points a, b forming the only part.
inline leraytk::PartitionedComplex two_points_one_part() {
  return leraytk::PartitionedComplex(two_points(), {{0, 1}});
}

inline leraytk::PartitionedComplex singleton_parts(const leraytk::SimplicialComplex& x) {
  std::vector<std::vector<leraytk::VertexId>> parts;
  for (leraytk::VertexId v = 0; v < x.vertex_count(); ++v) parts.push_back({v});
  return leraytk::PartitionedComplex(x, std::move(parts));
}

// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline leraytk::SimplicialComplex torus7() {
  std::vector<std::vector<std::int64_t>> t;
  for (std::int64_t i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return leraytk::make_complex(t);
}

// A deterministic corpus of small complexes: fixed shapes plus seeded
// random complexes on up to `max_n` vertices.
inline std::vector<leraytk::SimplicialComplex> corpus(std::size_t count, std::size_t max_n,
                                                      std::uint64_t seed = 1) {
  std::vector<leraytk::SimplicialComplex> out = {
      hollow_triangle(), solid_triangle(), two_points(), leraytk::boundary_complex(4),
      leraytk::full_simplex(1), leraytk::make_complex({{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
  for (std::size_t i = 0; i < count; ++i) {
    leraytk::CounterRng rng(seed + i, 7);
    const std::size_t n = 1 + rng.below(max_n);
    const std::size_t dim = 1 + rng.below(3);
    const double density = static_cast<double>(1 + rng.below(7)) / 8.0;
    out.push_back(leraytk::random_complex(n, dim, density, seed + i, 1));
  }
  return out;
}

}  // namespace fixtures
