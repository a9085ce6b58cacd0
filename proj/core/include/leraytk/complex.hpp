#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leraytk/simplex.hpp"

namespace leraytk {

inline constexpr std::size_t kDefaultSimplexGuard = 2'000'000;

// A finite abstract simplicial complex stored by its facets.
//
// The vertex table has `vertex_count()` entries. Complexes that share a
// table (the factors of an intersection, the pieces of a partitioned
// complex) may leave some table entries unused: such an entry is not a
// simplex and contributes nothing to homology. `vertex_set()` lists the
// entries that are 0-simplices.
//
// Two degenerate values are kept distinct:
//   void  - no simplices at all (no facets);
//   empty - only the empty simplex (the single facet {}).
class SimplicialComplex {
 public:
  // The void complex on an empty table.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(std::size_t vertex_count = 0);
  static SimplicialComplex empty_complex(std::size_t vertex_count = 0);

  // Generators may be any simplices; duplicates and non-maximal entries
  // are absorbed. Throws InvalidArgument on ids >= vertex_count.
  static SimplicialComplex from_generators(std::size_t vertex_count,
                                           std::vector<Simplex> generators);

  // `closed` must be downward closed (every face of a member is a member).
  // Facet extraction is linear in the total size instead of quadratic.
  static SimplicialComplex from_closed_family(std::size_t vertex_count,
                                              std::vector<Simplex> closed);

  // `facets` must already be pairwise incomparable; only sorting and
  // deduplication are applied.
  static SimplicialComplex from_antichain(std::size_t vertex_count,
                                          std::vector<Simplex> facets);

  std::size_t vertex_count() const { return vertex_count_; }
  std::span<const Simplex> facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  // A single facet (the void complex is not a simplex; {} is).
  bool is_simplex() const { return facets_.size() == 1; }
  // -2 for the void complex, -1 for the empty complex.
  int dimension() const;

  bool contains(const Simplex& s) const;
  Simplex vertex_set() const;

  // Labels are opaque strings for reports; unlabeled vertices print as ids.
  std::string label(VertexId v) const;
  std::span<const std::string> labels() const { return labels_; }
  SimplicialComplex with_labels(std::vector<std::string> labels) const;

  // Index map back to the complex this one was carved out of (induced
  // subcomplexes); empty when there is no parent.
  std::span<const VertexId> parent_map() const { return parent_; }
  SimplicialComplex with_parent_map(std::vector<VertexId> parent) const;

  // All simplices, grouped by size: result[0] holds the empty simplex (when
  // the complex is not void), result[q + 1] the q-simplices. Each group is
  // sorted lexicographically. Throws GuardExceeded past `guard` simplices.
  std::vector<std::vector<Simplex>> simplices_by_size(
      std::size_t guard = kDefaultSimplexGuard) const;

  // f_q for q = 0..dim.
  std::vector<std::size_t> face_counts(std::size_t guard = kDefaultSimplexGuard) const;

  // Same table size and same facets; labels and parent maps are ignored.
  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;  // sorted lexicographically, an antichain
  std::vector<std::string> labels_;
  std::vector<VertexId> parent_;
};

// Builds a complex from raw id lists. Ids must be non-negative; the table
// size is 1 + the largest id. An empty list is rejected unless `allow_void`.
SimplicialComplex make_complex(const std::vector<std::vector<std::int64_t>>& facet_lists,
                               bool allow_void = false);

// X[S]: simplices of X contained in S. The result is re-indexed onto S
// (in increasing order) and records S as its parent map.
SimplicialComplex induced(const SimplicialComplex& x, const Simplex& subset);

// lk(X, A) on the same vertex table. Throws InvalidArgument if A is not in X.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& a);

// X1 * X2 on the concatenated vertex table (X2's ids shifted by
// X1.vertex_count()).
SimplicialComplex join(const SimplicialComplex& x1, const SimplicialComplex& x2);

// Delta on n vertices and its boundary (all proper subsets).
SimplicialComplex full_simplex(std::size_t n);
SimplicialComplex boundary_complex(std::size_t n);

// Both operands must share the vertex table (equal vertex_count).
SimplicialComplex unite(const SimplicialComplex& x1, const SimplicialComplex& x2);
SimplicialComplex intersect(const SimplicialComplex& x1, const SimplicialComplex& x2);

// Image of X under an injective vertex map into a table of size `target_count`.
SimplicialComplex relabel(const SimplicialComplex& x, std::span<const VertexId> vertex_map,
                          std::size_t target_count);

// True when `vertex_map` sends the simplices of `from` bijectively onto the
// simplices of `to`.
bool is_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                    std::span<const VertexId> vertex_map);

// Connected components among the vertices that are 0-simplices.
std::size_t connected_components(const SimplicialComplex& x);

// Order complex of a set of simplices of some source complex. Vertex v of
// `complex` stands for `elements[v]`.
struct OrderComplex {
  SimplicialComplex complex;
  std::vector<Simplex> elements;
};

// sd(K): order complex of the nonempty simplices of K under inclusion.
OrderComplex subdivision(const SimplicialComplex& k);

// Order complexes of [sigma, .] and (sigma, .] in the face poset of K.
// Throws InvalidArgument if sigma is not in K.
std::pair<OrderComplex, OrderComplex> upper_interval(const SimplicialComplex& k,
                                                     const Simplex& sigma);

}  // namespace leraytk
