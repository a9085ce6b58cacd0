#include "leraytk/partitioned.hpp"

#include <algorithm>

#include "leraytk/errors.hpp"

namespace leraytk {

PartitionedComplex::PartitionedComplex(SimplicialComplex x,
                                       std::vector<std::vector<VertexId>> parts)
    : x_(std::move(x)), parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("a partitioned complex needs at least one part");
  constexpr auto kUnassigned = static_cast<PartId>(-1);
  part_of_.assign(x_.vertex_count(), kUnassigned);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto& part = parts_[i];
    if (part.empty()) throw InvalidArgument("part " + std::to_string(i) + " is empty");
    std::sort(part.begin(), part.end());
    for (VertexId v : part) {
      if (v >= x_.vertex_count()) {
        throw InvalidArgument("part " + std::to_string(i) + " names unknown vertex " +
                              std::to_string(v));
      }
      if (part_of_[v] != kUnassigned) {
        throw InvalidArgument("vertex " + std::to_string(v) + " lies in two parts");
      }
      part_of_[v] = static_cast<PartId>(i);
    }
  }
  for (VertexId v = 0; v < part_of_.size(); ++v) {
    if (part_of_[v] == kUnassigned) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is in no part");
    }
  }
  for (const auto& f : x_.facets()) {
    std::vector<PartId> seen;
    for (VertexId v : f) seen.push_back(part_of_[v]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw InvalidArgument("facet " + f.to_string() + " meets a part twice");
    }
  }
}

Simplex PartitionedComplex::image_of(const Simplex& sigma) const {
  std::vector<VertexId> image;
  image.reserve(sigma.size());
  for (VertexId v : sigma) image.push_back(part_of_.at(v));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return Simplex::from_sorted(std::move(image));
}

SimplicialComplex project(const PartitionedComplex& px) {
  const auto& x = px.complex();
  if (x.is_void()) return SimplicialComplex::void_complex(px.part_count());
  std::vector<Simplex> images;
  for (const auto& f : x.facets()) images.push_back(px.image_of(f));
  return SimplicialComplex::from_generators(px.part_count(), std::move(images));
}

std::map<Simplex, std::vector<Section>> sections_by_image(const PartitionedComplex& px,
                                                          std::size_t guard) {
  std::map<Simplex, std::vector<Section>> out;
  for (const auto& group : px.complex().simplices_by_size(guard)) {
    for (const auto& tau : group) {
      // Order tau's vertices by part to align them with the image.
      std::vector<std::pair<PartId, VertexId>> keyed;
      for (VertexId v : tau) keyed.emplace_back(px.part_of(v), v);
      std::sort(keyed.begin(), keyed.end());
      std::vector<VertexId> image;
      Section section;
      for (auto [p, v] : keyed) {
        image.push_back(p);
        section.push_back(v);
      }
      out[Simplex::from_sorted(std::move(image))].push_back(std::move(section));
    }
  }
  for (auto& [image, list] : out) std::sort(list.begin(), list.end());
  return out;
}

FiberBound fiber_bound(const PartitionedComplex& px) {
  if (px.complex().vertex_set().empty()) {
    throw InvalidArgument("fiber bound of a complex without vertices is undefined");
  }
  const auto sections = sections_by_image(px);
  FiberBound best;
  // Scan images by size then lex so the witness is the first maximizer.
  std::vector<const Simplex*> images;
  for (const auto& [image, list] : sections) {
    if (!image.empty()) images.push_back(&image);
  }
  std::sort(images.begin(), images.end(),
            [](const Simplex* a, const Simplex* b) { return SizeThenLex{}(*a, *b); });
  for (const Simplex* image : images) {
    const std::size_t count = sections.at(*image).size();
    if (count > best.r) {
      best.r = count;
      best.witness = *image;
    }
  }
  return best;
}

Simplex tilde_closure(const PartitionedComplex& px, const Simplex& sigma) {
  if (!px.complex().contains(sigma)) {
    throw InvalidArgument("simplex " + sigma.to_string() + " is not in X");
  }
  std::vector<VertexId> out;
  for (PartId p : px.image_of(sigma)) {
    const auto& part = px.parts()[p];
    out.insert(out.end(), part.begin(), part.end());
  }
  return Simplex(std::move(out));
}

PartitionedComplex extremal_example(std::size_t r, std::size_t d) {
  if (r < 1 || d < 2) throw InvalidArgument("extremal example needs r >= 1 and d >= 2");
  const std::size_t m = r * d;
  auto id = [r](std::size_t i, std::size_t j) {  // 1-based (i, j)
    return static_cast<VertexId>((i - 1) * r + (j - 1));
  };

  std::vector<Simplex> facets;
  for (std::size_t k = 1; k <= r; ++k) {
    // Block A_k = {(k-1)d + 1, ..., kd}; the slice j = k carries X_k.
    const std::size_t lo = (k - 1) * d + 1;
    const std::size_t hi = k * d;
    for (std::size_t dropped = lo; dropped <= hi; ++dropped) {
      std::vector<VertexId> verts;
      for (std::size_t i = 1; i <= m; ++i) {
        if (i != dropped) verts.push_back(id(i, k));
      }
      facets.emplace_back(std::move(verts));
    }
  }

  std::vector<std::string> labels(m * r);
  std::vector<std::vector<VertexId>> parts(m);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      labels[id(i, j)] = std::to_string(i) + "." + std::to_string(j);
      parts[i - 1].push_back(id(i, j));
    }
  }
  auto x = SimplicialComplex::from_antichain(m * r, std::move(facets)).with_labels(std::move(labels));
  return PartitionedComplex(std::move(x), std::move(parts));
}

}  // namespace leraytk
