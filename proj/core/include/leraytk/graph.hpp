#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leraytk/complex.hpp"

namespace leraytk {

// Simple undirected graph on vertices 0..vertex_count-1. Duplicate edges are
// merged; self-loops are rejected.
class Graph {
 public:
  Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  bool adjacent(VertexId u, VertexId v) const { return adjacency_[u][v] != 0; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::vector<char>> adjacency_;
  std::vector<std::vector<VertexId>> neighbors_;
};

// Flag complex: simplices are the cliques (facets are maximal cliques).
SimplicialComplex clique_complex(const Graph& g);

// A perfect elimination ordering if one exists, found by maximum
// cardinality search and then verified.
std::optional<std::vector<VertexId>> perfect_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

}  // namespace leraytk
