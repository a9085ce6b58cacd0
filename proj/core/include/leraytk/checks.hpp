#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leraytk/homology.hpp"
#include "leraytk/leray.hpp"
#include "leraytk/multipoint.hpp"

namespace leraytk {

// L(pi(X)) <= r L(X) + r - 1 with r = r(X, pi).
struct ProjectionBoundReport {
  std::size_t leray_x = 0;
  std::size_t fiber_bound = 0;
  Simplex fiber_witness;
  std::size_t leray_image = 0;
  std::size_t bound = 0;
  bool holds = false;
  bool tight = false;
};

ProjectionBoundReport check_projection_theorem(const PartitionedComplex& px,
                                               const LerayOptions& options = {});

// Reduced homology of M(X_1, ..., X_k) vanishes in every degree
// j >= sum_i L(X_i).
struct MultiPointVanishingReport {
  std::vector<std::size_t> leray_factors;
  std::size_t threshold = 0;
  BettiVector betti;
  // First degree >= threshold with a nonzero Betti number, or -1.
  int violation_degree = -1;
  bool holds = false;
};

MultiPointVanishingReport check_mps_vanishing(std::span<const PartitionedComplex> factors,
                                              const MultiPointOptions& mpc_options = {},
                                              const LerayOptions& leray_options = {});

// L(X_1 cap ... cap X_k) <= sum_j L(X_j) for complexes on one vertex table.
struct IntersectionBoundReport {
  std::vector<std::size_t> leray_factors;
  std::size_t leray_intersection = 0;
  std::size_t bound = 0;
  bool holds = false;
  bool tight = false;
};

IntersectionBoundReport check_intersection_bound(std::span<const SimplicialComplex> complexes,
                                                 const LerayOptions& options = {});

}  // namespace leraytk
