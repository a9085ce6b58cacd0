#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leraytk/complex.hpp"
#include "leraytk/integer_matrix.hpp"

namespace leraytk {

// Augmented simplicial chain complex of X over Q.
//
// basis[q + 1] lists the q-simplices in lexicographic order, q = -1..dim
// (degree -1 holds the empty simplex). boundary(q) maps C_q to C_{q-1};
// boundary(0) is the augmentation, a single all-ones row.
struct ChainBoundary {
  std::vector<std::vector<Simplex>> basis;
  std::vector<SparseIntMatrix> maps;  // maps[q] = boundary(q), q = 0..dim

  int top_degree() const { return static_cast<int>(maps.size()) - 1; }
  const SparseIntMatrix& boundary(int q) const { return maps.at(static_cast<std::size_t>(q)); }
};

ChainBoundary boundary_matrices(const SimplicialComplex& x,
                                std::size_t guard = kDefaultSimplexGuard);

// Reduced rational Betti numbers.
//
// Conventions: the void complex has every group zero; the empty complex {}
// has minus_one = 1; any complex with a vertex has minus_one = 0. `euler`
// is the unreduced Euler characteristic sum_{q>=0} (-1)^q f_q.
struct BettiVector {
  std::vector<std::size_t> reduced;  // degrees 0..dim
  std::size_t minus_one = 0;
  std::int64_t euler = 0;

  std::size_t operator[](std::size_t q) const { return q < reduced.size() ? reduced[q] : 0; }
  // Largest degree q >= 0 with a nonzero entry, or -1.
  int top_nonzero_degree() const;
  bool acyclic() const;  // every reduced group (including degree -1) vanishes
  bool operator==(const BettiVector&) const = default;
};

BettiVector reduced_betti(const SimplicialComplex& x, std::size_t guard = kDefaultSimplexGuard);

// Unreduced Betti numbers b_0..b_dim (empty for void and empty complexes).
std::vector<std::size_t> unreduced_betti(const SimplicialComplex& x,
                                         std::size_t guard = kDefaultSimplexGuard);

std::int64_t euler_characteristic(const SimplicialComplex& x,
                                  std::size_t guard = kDefaultSimplexGuard);

// dim H_q = dims[q] - rank(maps[q]) - rank(maps[q + 1]) for a chain complex
// whose q-th differential maps[q] goes from degree q to q - 1. maps[0] may be
// an empty 0 x dims[0] matrix when there is no augmentation.
std::vector<std::size_t> homology_dimensions(std::span<const std::size_t> dims,
                                             std::span<const SparseIntMatrix> maps);

}  // namespace leraytk
