#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leraytk/box.hpp"
#include "leraytk/complex.hpp"
#include "leraytk/helly.hpp"
#include "leraytk/partitioned.hpp"

// Instance files. Readers throw FormatError with the JSON path of the
// offending field; writers are canonical (sorted facets, compact, one
// trailing newline), so save(load(f)) == f for canonical f.
//
//   complex:      {"vertices":["a","b"],"facets":[[0,1]]}
//   partitioned:  {"vertices":[...],"facets":[...],"parts":[[0],[1]]}
//   box family:   {"d":2,"members":{"G1":[[["0","1"],["0","1/2"]]]}}
//   atom family:  {"atoms":["p","q"],"members":{"A":["p","q"]}}

namespace leraytk {

SimplicialComplex parse_complex(std::string_view text);
std::string write_complex(const SimplicialComplex& x);

PartitionedComplex parse_partitioned(std::string_view text);
std::string write_partitioned(const PartitionedComplex& px);

// A box family file before any (F, r) validation: each member is a list of
// boxes (one box for a plain family).
struct BoxGroups {
  std::size_t dimension = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Box>> members;
};

BoxGroups parse_box_groups(std::string_view text);
std::string write_box_groups(const BoxGroups& family);

AtomFamily parse_atom_family(std::string_view text);
std::string write_atom_family(const AtomFamily& family);

// True when the text is an object with an "atoms" key.
bool is_atom_family(std::string_view text);

// Pieces are named "<member>.<j>". Without `r`, the smallest valid r is
// used. Throws FrViolation when the grouping is not an (F, r)-family.
FrFamily to_fr_family(const BoxGroups& family, std::optional<std::size_t> r = std::nullopt);
BoxGroups to_box_groups(const FrFamily& family);

}  // namespace leraytk
