#include "leraytk/multipoint.hpp"

#include <algorithm>
#include <limits>

#include "leraytk/errors.hpp"

namespace leraytk {

std::optional<VertexId> MultiPointComplex::find(const MultiPointVertex& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<VertexId>(it - vertices.begin());
}

std::vector<VertexId> MultiPointComplex::coordinate_map(std::size_t coordinate) const {
  std::vector<VertexId> out;
  out.reserve(vertices.size());
  for (const auto& w : vertices) out.push_back(w.coords.at(coordinate));
  return out;
}

namespace {

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

std::string vertex_label(const SimplicialComplex& table, const MultiPointVertex& w) {
  std::string out = std::to_string(w.part) + ":(";
  for (std::size_t r = 0; r < w.coords.size(); ++r) {
    if (r) out += ",";
    out += table.label(w.coords[r]);
  }
  return out + ")";
}

}  // namespace

MultiPointComplex generalized_mpc(std::span<const PartitionedComplex> factors,
                                  const MultiPointOptions& options) {
  if (factors.empty()) throw InvalidArgument("generalized_mpc needs at least one factor");
  const auto& parts = factors[0].parts();
  for (const auto& f : factors) {
    if (f.parts() != parts || f.complex().vertex_count() != factors[0].complex().vertex_count()) {
      throw InvalidArgument("factors of a multiple point complex must share their parts");
    }
  }
  const std::size_t k = factors.size();

  std::size_t candidate_vertices = 0;
  for (const auto& part : parts) {
    const std::size_t n = saturating_pow(part.size(), k);
    candidate_vertices = n > options.vertex_guard ? n : candidate_vertices + n;
    if (candidate_vertices > options.vertex_guard) {
      throw GuardExceeded("multiple point complex: sum |V_i|^k exceeds vertex guard of " +
                          std::to_string(options.vertex_guard));
    }
  }

  MultiPointComplex out;
  out.k = k;
  out.factors.assign(factors.begin(), factors.end());
  out.equal_factors = std::all_of(factors.begin(), factors.end(), [&](const auto& f) {
    return f.complex() == factors[0].complex();
  });

  std::vector<std::map<Simplex, std::vector<Section>>> sections;
  for (const auto& f : factors) sections.push_back(sections_by_image(f, options.simplex_guard));

  // Images present in every factor, with the product size for the guard.
  std::vector<const Simplex*> common;
  std::size_t total = 0;
  for (const auto& [image, list] : sections[0]) {
    std::size_t count = 1;
    bool everywhere = true;
    for (const auto& s : sections) {
      auto it = s.find(image);
      if (it == s.end()) {
        everywhere = false;
        break;
      }
      count = count > options.simplex_guard ? count : count * it->second.size();
    }
    if (!everywhere) continue;
    common.push_back(&image);
    total += count;
    if (total > options.simplex_guard) {
      throw GuardExceeded("multiple point complex exceeds simplex guard of " +
                          std::to_string(options.simplex_guard));
    }
  }

  // Vertices are the simplices over single parts.
  for (const Simplex* image : common) {
    if (image->size() != 1) continue;
    std::vector<std::size_t> index(k, 0);
    while (true) {
      MultiPointVertex w{(*image)[0], std::vector<VertexId>(k)};
      for (std::size_t r = 0; r < k; ++r) w.coords[r] = sections[r].at(*image)[index[r]][0];
      out.vertices.push_back(std::move(w));
      std::size_t r = k;
      while (r > 0 && ++index[r - 1] == sections[r - 1].at(*image).size()) index[--r] = 0;
      if (r == 0) break;
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  std::vector<Simplex> simplices;
  simplices.reserve(total);
  for (const Simplex* image : common) {
    std::vector<const std::vector<Section>*> lists;
    for (std::size_t r = 0; r < k; ++r) lists.push_back(&sections[r].at(*image));
    std::vector<std::size_t> index(k, 0);
    while (true) {
      std::vector<VertexId> ids;
      ids.reserve(image->size());
      for (std::size_t j = 0; j < image->size(); ++j) {
        MultiPointVertex w{(*image)[j], std::vector<VertexId>(k)};
        for (std::size_t r = 0; r < k; ++r) w.coords[r] = (*lists[r])[index[r]][j];
        ids.push_back(*out.find(w));
      }
      // Ids are ordered by part first, and the image is sorted by part.
      simplices.push_back(Simplex::from_sorted(std::move(ids)));
      std::size_t r = k;
      while (r > 0 && ++index[r - 1] == lists[r - 1]->size()) index[--r] = 0;
      if (r == 0) break;
    }
  }

  out.complex = simplices.empty()
                    ? SimplicialComplex::void_complex(out.vertices.size())
                    : SimplicialComplex::from_closed_family(out.vertices.size(), std::move(simplices));
  std::vector<std::string> labels;
  labels.reserve(out.vertices.size());
  for (const auto& w : out.vertices) labels.push_back(vertex_label(factors[0].complex(), w));
  out.complex = out.complex.with_labels(std::move(labels));
  return out;
}

MultiPointComplex multiple_point_complex(const PartitionedComplex& px, std::size_t k,
                                         const MultiPointOptions& options) {
  if (k < 1) throw InvalidArgument("multiple point complex needs k >= 1");
  std::vector<PartitionedComplex> copies(k, px);
  return generalized_mpc(copies, options);
}

}  // namespace leraytk
