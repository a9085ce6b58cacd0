#include "leraytk/simplex.hpp"

#include <algorithm>
#include <iterator>

#include "leraytk/errors.hpp"

namespace leraytk {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidArgument("simplex has a repeated vertex");
  }
}

Simplex Simplex::from_sorted(std::vector<VertexId> sorted) {
  Simplex s;
  s.vertices_ = std::move(sorted);
  return s;
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return size() <= other.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Simplex Simplex::united_with(const Simplex& other) const {
  std::vector<VertexId> out;
  out.reserve(size() + other.size());
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::intersected_with(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::without(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::facet_without(std::size_t index) const {
  std::vector<VertexId> out;
  out.reserve(size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != index) out.push_back(vertices_[i]);
  }
  return from_sorted(std::move(out));
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (VertexId v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

int sorting_sign(std::span<const VertexId> values) {
  // Inversion count parity; inputs are short (simplex sizes).
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace leraytk
