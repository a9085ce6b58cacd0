#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "leraytk/complex.hpp"
#include "leraytk/graph.hpp"

namespace leraytk {

enum class LerayMethod { kDefinition, kLinks };

std::string_view to_string(LerayMethod method);

struct LerayOptions {
  // leray_by_definition scans 2^n induced subcomplexes.
  std::size_t max_vertices = 18;
  std::size_t simplex_guard = kDefaultSimplexGuard;
};

// Evidence for a value d > 0: the reduced Betti number of `where` in degree
// d - 1 is nonzero. `where` is the vertex subset S (definition: X[S]) or
// the simplex sigma (links: lk(X, sigma)).
struct LerayWitness {
  Simplex where;
  int degree = 0;
};

struct LerayCertificate {
  std::size_t value = 0;
  std::optional<LerayWitness> witness;
  LerayMethod method = LerayMethod::kLinks;
};

// 1 + max{ i : some X[S] has nonzero reduced H_i }, scanning subsets of the
// vertex set by size then lexicographically. Throws GuardExceeded above
// `max_vertices`.
LerayCertificate leray_by_definition(const SimplicialComplex& x, const LerayOptions& options = {});

// Same number from links: 1 + max{ i : some lk(X, sigma), sigma in X
// (including the empty simplex), has nonzero reduced H_i }.
LerayCertificate leray_by_links(const SimplicialComplex& x, const LerayOptions& options = {});

// Production entry point (links).
std::size_t leray_number(const SimplicialComplex& x, const LerayOptions& options = {});

// Recomputes the witness homology; true when the certificate is consistent.
bool verify_certificate(const SimplicialComplex& x, const LerayCertificate& certificate);

struct ChordalReport {
  bool chordal = false;
  std::size_t leray = 0;
  // chordal <=> leray <= 1
  bool consistent = false;
};

ChordalReport check_chordal_characterization(const Graph& g, const LerayOptions& options = {});

}  // namespace leraytk
