#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace leraytk {

using VertexId = std::uint32_t;

// A finite set of vertices, stored as a strictly increasing sequence. The
// sorted order is also the orientation used by every boundary and sign
// computation in the library. The default value is the empty simplex.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> vertices);
  // Sorts and checks for duplicates; throws InvalidArgument on a repeat.
  explicit Simplex(std::vector<VertexId> vertices);

  // Skips validation. `sorted` must already be strictly increasing.
  static Simplex from_sorted(std::vector<VertexId> sorted);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  // Dimension is size() - 1, so the empty simplex has dimension -1.
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;

  Simplex united_with(const Simplex& other) const;
  Simplex intersected_with(const Simplex& other) const;
  Simplex without(const Simplex& other) const;
  // Face obtained by deleting the vertex at position `index`.
  Simplex facet_without(std::size_t index) const;

  std::string to_string() const;

  // Lexicographic on the vertex sequence.
  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

// Orders simplices by size first, then lexicographically. This is the
// enumeration order used for witnesses and certificates.
struct SizeThenLex {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

// Parity of the permutation that sorts `values` (assumed pairwise distinct):
// +1 for even, -1 for odd.
int sorting_sign(std::span<const VertexId> values);

}  // namespace leraytk
