#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "leraytk/complex.hpp"

namespace leraytk {

using PartId = std::uint32_t;

// A complex X inside the join V_1 * ... * V_m of 0-dimensional parts.
//
// The parts partition X's vertex table (so they may include table entries
// that are not simplices of X, which lets several complexes share one part
// structure). No simplex of X may contain two vertices of the same part.
class PartitionedComplex {
 public:
  // Throws InvalidArgument if the parts overlap, miss a table entry, are
  // empty, or if a facet meets some part twice.
  PartitionedComplex(SimplicialComplex x, std::vector<std::vector<VertexId>> parts);

  const SimplicialComplex& complex() const { return x_; }
  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  PartId part_of(VertexId v) const { return part_of_[v]; }

  // pi(sigma) as a simplex of Delta_{m-1}.
  Simplex image_of(const Simplex& sigma) const;

  // Same X and same parts.
  bool operator==(const PartitionedComplex& other) const {
    return x_ == other.x_ && parts_ == other.parts_;
  }

 private:
  SimplicialComplex x_;
  std::vector<std::vector<VertexId>> parts_;
  std::vector<PartId> part_of_;
};

// Y = pi(X) on the vertex table [m].
SimplicialComplex project(const PartitionedComplex& px);

// A section over I is a simplex tau of X with pi(tau) = I; it is stored
// aligned with I, i.e. entry j is tau's vertex in part I[j].
using Section = std::vector<VertexId>;

// All sections of X grouped by their image, including the empty section
// over the empty image when X is not void. Each list is sorted.
std::map<Simplex, std::vector<Section>> sections_by_image(const PartitionedComplex& px,
                                                          std::size_t guard = kDefaultSimplexGuard);

struct FiberBound {
  std::size_t r = 0;
  Simplex witness;  // first image simplex (size, then lex) attaining r
};

// r(X, pi): the largest number of sections over a nonempty simplex of
// pi(X). A point in the relative interior of sigma has one preimage per
// section over sigma, so this is the maximal fiber cardinality. Throws
// InvalidArgument when X has no vertices.
FiberBound fiber_bound(const PartitionedComplex& px);

// Union of the parts met by sigma. Throws InvalidArgument if sigma is not
// in X.
Simplex tilde_closure(const PartitionedComplex& px, const Simplex& sigma);

// The tightness family for the projection bound: m = r*d parts
// V_i = {i} x [r], X the union over k of the joins
//   Delta(A_1 x {k}) * ... * boundary(Delta(A_k x {k})) * ... * Delta(A_r x {k})
// where A_1, ..., A_r split [m] into consecutive blocks of d. Vertex (i, j)
// (1-based) has id (i - 1) * r + (j - 1) and label "i.j".
PartitionedComplex extremal_example(std::size_t r, std::size_t d);

}  // namespace leraytk
