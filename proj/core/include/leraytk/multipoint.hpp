#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "leraytk/partitioned.hpp"

namespace leraytk {

struct MultiPointOptions {
  // Bound on sum_i |V_i|^k, the size of the candidate vertex set.
  std::size_t vertex_guard = 20'000;
  std::size_t simplex_guard = kDefaultSimplexGuard;
};

// A vertex w = (i, (v_1, ..., v_k)) with every v_r in part V_i.
struct MultiPointVertex {
  PartId part = 0;
  std::vector<VertexId> coords;
  auto operator<=>(const MultiPointVertex&) const = default;
  bool operator==(const MultiPointVertex&) const = default;
};

// Simplicial model of M(X_1, ..., X_k): a set {w_{i_0}, ..., w_{i_p}} over
// distinct parts is a simplex iff for every coordinate r the vertices
// v_{i_0, r}, ..., v_{i_p, r} span a simplex of X_r.
//
// Vertex ids follow the order of MultiPointVertex (part first, then the
// coordinate tuple), so every simplex lists its vertices by part.
struct MultiPointComplex {
  std::size_t k = 0;
  std::vector<MultiPointVertex> vertices;
  SimplicialComplex complex;
  std::vector<PartitionedComplex> factors;
  bool equal_factors = false;

  std::optional<VertexId> find(const MultiPointVertex& w) const;
  // Vertex map sending (i, (v_1..v_k)) to v_{coordinate + 1} in the shared table.
  std::vector<VertexId> coordinate_map(std::size_t coordinate) const;
};

// M(X_1, ..., X_k). All factors must have identical parts (and thus the
// same vertex table). Throws GuardExceeded past either guard.
MultiPointComplex generalized_mpc(std::span<const PartitionedComplex> factors,
                                  const MultiPointOptions& options = {});

// M_k = M(X, ..., X).
MultiPointComplex multiple_point_complex(const PartitionedComplex& px, std::size_t k,
                                         const MultiPointOptions& options = {});

}  // namespace leraytk
