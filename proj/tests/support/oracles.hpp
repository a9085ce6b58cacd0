#pragma once

// Slow, direct reference implementations. They share no code with the
// library beyond its value types: simplices are bitmasks, ranks come from
// dense rational elimination, orbits from an explicit projector.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "leraytk/box.hpp"
#include "leraytk/complex.hpp"
#include "leraytk/graph.hpp"
#include "leraytk/partitioned.hpp"

namespace oracle {

using Mask = std::uint32_t;
using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Q>>;

// Every simplex of x (including the empty one unless x is void), sorted.
std::vector<Mask> faces(const leraytk::SimplicialComplex& x);

std::size_t rank(Matrix m);

// Nonzero invariant factors of an integer matrix.
std::vector<Z> smith_invariants(std::vector<std::vector<Z>> m);

// Reduced Betti numbers of a downward closed face list; entry 0 is degree
// -1, entry q + 1 degree q.
std::vector<std::size_t> reduced_betti(const std::vector<Mask>& faces);
std::vector<std::size_t> reduced_betti(const leraytk::SimplicialComplex& x);

// Integer boundary matrix of degree q (rows: (q-1)-faces, columns: q-faces)
// in lexicographic bitmask order.
std::vector<std::vector<Z>> boundary(const std::vector<Mask>& faces, std::size_t q);

// 1 + max{ q >= 0 : some induced subcomplex has nonzero reduced H_q }.
std::size_t leray(const leraytk::SimplicialComplex& x);

// Every induced subgraph has a vertex whose neighbourhood is a clique.
bool chordal(const leraytk::Graph& g);

std::size_t fiber_bound(const leraytk::PartitionedComplex& px);

// dim Alt H_q(M_k), unreduced, from the projector sum_g sign(g) g on an
// explicitly enumerated M_k whose vertices are ordered by coordinates first.
std::vector<std::size_t> alt_betti(const leraytk::PartitionedComplex& px, std::size_t k);

// Unreduced Betti numbers of pi(X), computed from the image face set.
std::vector<std::size_t> image_betti(const leraytk::PartitionedComplex& px);

// Integer boxes as explicit lattice point sets in [0, extent]^d.
struct LatticeSet {
  std::vector<std::vector<std::int64_t>> points;  // sorted
};

LatticeSet lattice_points(const std::vector<leraytk::Box>& pieces, std::int64_t extent);

// Helly number of a family of point sets, straight from the definition:
// the least h >= 1 such that every subfamily whose subfamilies of size <= h
// all meet has a common point.
std::size_t helly(const std::vector<LatticeSet>& family);

}  // namespace oracle
