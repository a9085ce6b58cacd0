#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "leraytk/integer_matrix.hpp"
#include "leraytk/multipoint.hpp"

namespace leraytk {

// A vertex map together with the orientation rule: an oriented simplex
// [v_0 < ... < v_p] goes to the sorted image, times the parity of the
// sorting permutation.
struct SignedSimplicialMap {
  std::vector<VertexId> vertex_map;

  // Image simplex and its orientation sign.
  std::pair<Simplex, int> apply(const Simplex& s) const;
};

// Parity of a permutation of [k] given as its image list.
int permutation_sign(std::span<const std::size_t> perm);

// All permutations of [k] in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t k);

// The action of perm (j -> perm[j]) on M_k: (i, (v_1..v_k)) goes to the
// vertex whose coordinate perm[j] is v_j. Throws InvalidArgument unless M
// was built from k equal factors.
SignedSimplicialMap sym_action(const MultiPointComplex& m, std::span<const std::size_t> perm);

// One basis vector of Alt C_q: the image of the antisymmetrizer (without the
// 1/k! factor) on an orbit representative.
struct AltCell {
  // Representative as vertex descriptors, listed by part. It is the
  // lexicographically least simplex of its orbit.
  std::vector<MultiPointVertex> representative;
  // Simplices of M with their coefficients (+-1); the representative has +1.
  // Left empty by the section-based construction.
  std::vector<std::pair<Simplex, int>> terms;
};

// Alternating subcomplex of C_*(M_k) in degrees 0..top. maps[q] is the
// restricted boundary Alt C_q -> Alt C_{q-1}; maps[0] is the zero map to
// nothing (homology is unreduced).
struct AltChainComplex {
  std::size_t k = 0;
  std::vector<std::vector<AltCell>> cells;
  std::vector<SparseIntMatrix> maps;

  std::vector<std::size_t> dims() const;
};

// Orbit-based construction on an explicit M_k: every simplex's orbit under
// S_k is enumerated, and the orbit survives when no stabilizing permutation
// g has sign(g) * (orientation sign of g) = -1.
AltChainComplex alt_chain_complex(const MultiPointComplex& m,
                                  std::size_t guard = kDefaultSimplexGuard);

// Direct construction from X without materializing M_k. Over an image
// simplex I the simplices of M_k are k-tuples of sections over I, the
// surviving orbits are k-sets of distinct sections, and the representative
// lists them in increasing order.
AltChainComplex alt_chain_complex_from_sections(const PartitionedComplex& px, std::size_t k,
                                                std::size_t guard = kDefaultSimplexGuard);

// dim Alt H_q, unreduced.
std::vector<std::size_t> alt_betti(const AltChainComplex& alt);
std::vector<std::size_t> alt_betti(const MultiPointComplex& m,
                                   std::size_t guard = kDefaultSimplexGuard);

// E^1_{p,q} = Alt H_q(M_{p+1}) for 0 <= p <= r - 1, with r = r(X, pi).
struct E1Page {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> columns;  // columns[p][q]
  std::vector<std::size_t> column_r;              // computed at p = r; must vanish
  std::vector<std::size_t> image_betti;           // unreduced Betti numbers of pi(X)

  std::size_t at(std::size_t p, std::size_t q) const;
  std::int64_t signed_sum() const;  // sum (-1)^{p+q} E^1_{p,q}
  bool column_r_vanishes() const;
};

E1Page e1_page(const PartitionedComplex& px, std::size_t guard = kDefaultSimplexGuard);

// D^k: generated by the simplices of M_k containing, for every pair of
// coordinates r != s, a vertex whose r-th and s-th entries differ.
MultiPointComplex double_point_closure(const MultiPointComplex& m);

// Surviving orbit representatives of C_q(M_k) by degree, read off the
// coordinate columns: S_k permutes the k columns of a simplex (one row per
// vertex, listed by part), so the stabilizer is generated by transpositions
// of equal columns. An orbit survives iff its columns are pairwise distinct,
// and its representative has them in increasing order. Linear in the number
// of simplices, unlike the k! scan of alt_chain_complex.
std::vector<std::vector<Simplex>> alt_representatives(const MultiPointComplex& m,
                                                     std::size_t guard = kDefaultSimplexGuard);

struct AltChainIsoReport {
  std::vector<std::size_t> dims_double_point;
  std::vector<std::size_t> dims_multiple_point;
  bool equal_dimensions = false;
  // The inclusion D^k -> M_k sends the alternating basis of D^k onto that
  // of M_k (same representatives in every degree).
  bool bijective = false;
};

AltChainIsoReport check_alt_chain_iso(const MultiPointComplex& m,
                                      std::size_t guard = kDefaultSimplexGuard);

struct EulerReport {
  std::int64_t chi_image = 0;
  std::int64_t page_sum = 0;
  bool holds = false;
};

EulerReport check_euler(const E1Page& page);

// Entries with p <= r - 1, q >= 1 and p + q >= r L(X) + r - 1 must vanish.
struct ProofVanishingReport {
  std::size_t leray_x = 0;
  std::size_t r = 0;
  std::size_t threshold = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool holds = false;
};

ProofVanishingReport check_proof_vanishing(const E1Page& page, std::size_t leray_x);

}  // namespace leraytk
