#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leraytk/box.hpp"
#include "leraytk/complex.hpp"
#include "leraytk/errors.hpp"
#include "leraytk/partitioned.hpp"

namespace leraytk {

// Named axis-parallel boxes in R^d. Nonempty intersections of boxes are
// boxes, so any such family is a good cover.
struct BoxFamily {
  std::size_t dimension = 0;
  std::vector<std::string> names;
  std::vector<Box> members;

  std::size_t size() const { return members.size(); }
};

// Named subsets of a finite ground set of atoms, for experiments that only
// depend on the intersection pattern.
struct AtomFamily {
  std::vector<std::string> atoms;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> members;  // sorted atom indices

  std::size_t size() const { return members.size(); }
};

// Members G_i given as disjoint unions of pieces F_ij from a base box family.
// Built through make_fr_family, which validates the (F, r) property.
struct FrFamily {
  BoxFamily pieces;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> groups;  // piece indices of each G_i
  std::size_t r = 1;

  std::size_t size() const { return groups.size(); }
};

// Nerve: vertex i per member, a simplex per subfamily with a common point.
// The empty subfamily is always a simplex.
SimplicialComplex nerve(const BoxFamily& family);
SimplicialComplex nerve(const AtomFamily& family);
SimplicialComplex nerve(const FrFamily& family);

struct HellyOptions {
  std::size_t max_members = 20;
  // The definition scan (3^n) also runs up to this many members.
  std::size_t definition_cap = 12;
};

struct HellyReport {
  std::size_t helly_number = 1;
  // A largest inclusion-minimal subfamily with empty intersection (member
  // indices); empty when every subfamily meets.
  Simplex witness;
  // Smallest h making the Helly implication true, by exhaustive scan.
  std::optional<std::size_t> by_definition;
  std::size_t nerve_leray = 0;
  std::size_t bound = 1;  // 1 + nerve_leray
  bool holds = false;     // helly_number <= bound
  bool agree = true;      // by_definition (when run) equals helly_number
};

HellyReport helly_number(const BoxFamily& family, const HellyOptions& options = {});
HellyReport helly_number(const AtomFamily& family, const HellyOptions& options = {});
HellyReport helly_number(const FrFamily& family, const HellyOptions& options = {});

// Thrown by make_fr_family; `subfamily` names the offending groups (or the
// offending pair of pieces for a disjointness failure).
class FrViolation : public InvalidArgument {
 public:
  FrViolation(const std::string& what, std::vector<std::size_t> subfamily)
      : InvalidArgument(what), subfamily(std::move(subfamily)) {}
  std::vector<std::size_t> subfamily;
};

// Groups the pieces of `base` into members and checks: the groups partition
// the pieces, pieces of one group are pairwise disjoint, no group has more
// than r pieces, and every intersection of groups expands into at most r
// pairwise disjoint nonempty piece boxes.
FrFamily make_fr_family(BoxFamily base, std::vector<std::vector<std::size_t>> grouping,
                        std::vector<std::string> names, std::size_t r);

// Smallest r for which the family's grouping is an (F, r)-family: the
// largest number of nonempty piece choices over any subfamily.
std::size_t required_r(const FrFamily& family);

// Every group of one piece: the (F, 1)-family of the boxes themselves.
FrFamily singleton_fr_family(const BoxFamily& base);

struct PiecesProjection {
  PartitionedComplex x;         // nerve of the pieces, parts = groups
  SimplicialComplex image;      // pi(X)
  SimplicialComplex group_nerve;
  bool image_matches = false;   // pi(X) == N(G) simplex for simplex
  FiberBound fiber;
  bool fiber_within_r = false;
  // For every simplex of N(G): #sections of X over it equals the number of
  // piece choices with a common point.
  bool choice_counts_match = false;
};

PiecesProjection pieces_projection(const FrFamily& family);

struct AmentaReport {
  std::size_t helly = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t fiber_bound = 0;
  std::size_t leray_pieces = 0;  // L(X), X = N(pieces)
  std::size_t leray_groups = 0;  // L(N(G)) = L(pi(X))
  std::size_t bound = 0;         // r (d + 1)
  // h <= 1 + L(N(G)) = 1 + L(pi(X)) <= 1 + r' L(X) + r' - 1
  //   <= 1 + r L(X) + r - 1 <= r (d + 1), with r' the fiber bound.
  bool helly_leray = false;
  bool image_matches = false;
  bool projection_bound = false;
  bool fiber_within_r = false;
  bool pieces_leray_within_d = false;
  bool holds = false;        // h <= r (d + 1)
  bool chain_holds = false;  // every link above
};

AmentaReport check_amenta(const FrFamily& family, const HellyOptions& options = {});

// A random valid (F, r)-family of `groups` members in R^d with integer
// coordinates in [0, extent]. Candidates failing validation are redrawn;
// throws GuardExceeded after `max_attempts`.
FrFamily random_fr_family(std::size_t d, std::size_t groups, std::size_t r, std::uint64_t seed,
                          std::size_t extent = 12, std::size_t max_attempts = 10'000);

}  // namespace leraytk
