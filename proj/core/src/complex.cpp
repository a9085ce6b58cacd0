#include "leraytk/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "leraytk/errors.hpp"

namespace leraytk {
namespace {

using Mask = std::uint64_t;

Mask to_mask(const Simplex& s) {
  Mask m = 0;
  for (VertexId v : s) m |= Mask{1} << v;
  return m;
}

Simplex from_mask(Mask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return Simplex::from_sorted(std::move(out));
}

void check_ids(std::size_t vertex_count, const Simplex& s) {
  if (!s.empty() && s.vertices().back() >= vertex_count) {
    throw InvalidArgument("vertex id " + std::to_string(s.vertices().back()) +
                          " outside a table of " + std::to_string(vertex_count));
  }
}

// Keeps the inclusion-maximal members; input is consumed.
std::vector<Simplex> maximal_elements(std::size_t vertex_count, std::vector<Simplex> gens) {
  std::sort(gens.begin(), gens.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Simplex> kept;
  if (vertex_count <= 64) {
    std::vector<Mask> kept_masks;
    for (auto& g : gens) {
      const Mask m = to_mask(g);
      const bool absorbed = std::any_of(kept_masks.begin(), kept_masks.end(),
                                        [m](Mask k) { return (m & ~k) == 0; });
      if (!absorbed) {
        kept_masks.push_back(m);
        kept.push_back(std::move(g));
      }
    }
  } else {
    for (auto& g : gens) {
      const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                        [&g](const Simplex& k) { return g.is_face_of(k); });
      if (!absorbed) kept.push_back(std::move(g));
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::string join_labels(const SimplicialComplex& k, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += k.label(s[i]);
  }
  return out + "}";
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  return x;
}

SimplicialComplex SimplicialComplex::empty_complex(std::size_t vertex_count) {
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  x.facets_.emplace_back();
  return x;
}

SimplicialComplex SimplicialComplex::from_generators(std::size_t vertex_count,
                                                     std::vector<Simplex> generators) {
  for (const auto& g : generators) check_ids(vertex_count, g);
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  x.facets_ = maximal_elements(vertex_count, std::move(generators));
  return x;
}

SimplicialComplex SimplicialComplex::from_closed_family(std::size_t vertex_count,
                                                        std::vector<Simplex> closed) {
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  std::unordered_set<Simplex, SimplexHash> covered;
  for (const auto& s : closed) {
    check_ids(vertex_count, s);
    for (std::size_t i = 0; i < s.size(); ++i) covered.insert(s.facet_without(i));
  }
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  for (auto& s : closed) {
    if (!covered.contains(s)) x.facets_.push_back(std::move(s));
  }
  return x;
}

SimplicialComplex SimplicialComplex::from_antichain(std::size_t vertex_count,
                                                    std::vector<Simplex> facets) {
  for (const auto& f : facets) check_ids(vertex_count, f);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  x.facets_ = std::move(facets);
  return x;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dimension());
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&s](const Simplex& f) { return s.is_face_of(f); });
}

Simplex SimplicialComplex::vertex_set() const {
  std::vector<VertexId> all;
  for (const auto& f : facets_) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Simplex::from_sorted(std::move(all));
}

std::string SimplicialComplex::label(VertexId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

SimplicialComplex SimplicialComplex::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != vertex_count_) {
    throw InvalidArgument("label count does not match the vertex table");
  }
  SimplicialComplex x = *this;
  x.labels_ = std::move(labels);
  return x;
}

SimplicialComplex SimplicialComplex::with_parent_map(std::vector<VertexId> parent) const {
  SimplicialComplex x = *this;
  x.parent_ = std::move(parent);
  return x;
}

std::vector<std::vector<Simplex>> SimplicialComplex::simplices_by_size(std::size_t guard) const {
  std::vector<std::vector<Simplex>> out;
  if (facets_.empty()) return out;
  out.resize(static_cast<std::size_t>(dimension()) + 2);

  if (facets_.size() == 1) {
    // A single simplex: no duplicates across facets to worry about.
    const auto& f = facets_[0];
    if (f.size() >= 63 || (std::size_t{1} << f.size()) > guard) {
      throw GuardExceeded("simplex count exceeds guard of " + std::to_string(guard));
    }
    const std::size_t n = f.size();
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::vector<VertexId> verts;
      for (std::size_t i = 0; i < n; ++i) {
        if (bits >> i & 1) verts.push_back(f[i]);
      }
      out[verts.size()].push_back(Simplex::from_sorted(std::move(verts)));
    }
  } else if (vertex_count_ <= 64) {
    std::unordered_set<Mask> seen;
    for (const auto& f : facets_) {
      if (f.size() >= 63) throw GuardExceeded("facet too large to enumerate");
      const Mask fm = to_mask(f);
      // Iterate over all submasks of fm.
      Mask sub = fm;
      while (true) {
        seen.insert(sub);
        if (seen.size() > guard) {
          throw GuardExceeded("simplex count exceeds guard of " + std::to_string(guard));
        }
        if (sub == 0) break;
        sub = (sub - 1) & fm;
      }
    }
    for (Mask m : seen) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      out[size].push_back(from_mask(m));
    }
  } else {
    std::unordered_set<Simplex, SimplexHash> seen;
    for (const auto& f : facets_) {
      const std::size_t n = f.size();
      if (n >= 63) throw GuardExceeded("facet too large to enumerate");
      for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::vector<VertexId> verts;
        for (std::size_t i = 0; i < n; ++i) {
          if (bits >> i & 1) verts.push_back(f[i]);
        }
        seen.insert(Simplex::from_sorted(std::move(verts)));
        if (seen.size() > guard) {
          throw GuardExceeded("simplex count exceeds guard of " + std::to_string(guard));
        }
      }
    }
    for (const auto& s : seen) out[s.size()].push_back(s);
  }
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts(std::size_t guard) const {
  const auto all = simplices_by_size(guard);
  std::vector<std::size_t> f;
  for (std::size_t i = 1; i < all.size(); ++i) f.push_back(all[i].size());
  return f;
}

SimplicialComplex make_complex(const std::vector<std::vector<std::int64_t>>& facet_lists,
                               bool allow_void) {
  if (facet_lists.empty()) {
    if (!allow_void) {
      throw InvalidArgument("no facets given; request the void complex explicitly");
    }
    return SimplicialComplex::void_complex();
  }
  std::int64_t max_id = -1;
  std::vector<Simplex> gens;
  gens.reserve(facet_lists.size());
  for (const auto& list : facet_lists) {
    std::vector<VertexId> verts;
    for (std::int64_t id : list) {
      if (id < 0) throw InvalidArgument("negative vertex id " + std::to_string(id));
      if (id > std::int64_t{0xffffffff} - 1) throw InvalidArgument("vertex id out of range");
      max_id = std::max(max_id, id);
      verts.push_back(static_cast<VertexId>(id));
    }
    gens.emplace_back(std::move(verts));
  }
  return SimplicialComplex::from_generators(static_cast<std::size_t>(max_id + 1),
                                            std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& x, const Simplex& subset) {
  check_ids(x.vertex_count(), subset);
  std::vector<VertexId> position(x.vertex_count(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    position[subset[i]] = static_cast<VertexId>(i);
  }
  std::vector<Simplex> gens;
  for (const auto& f : x.facets()) {
    const Simplex meet = f.intersected_with(subset);
    std::vector<VertexId> local;
    local.reserve(meet.size());
    for (VertexId v : meet) local.push_back(position[v]);
    gens.push_back(Simplex::from_sorted(std::move(local)));
  }
  auto result = SimplicialComplex::from_generators(subset.size(), std::move(gens));
  if (!x.labels().empty()) {
    std::vector<std::string> labels;
    for (VertexId v : subset) labels.push_back(x.label(v));
    result = result.with_labels(std::move(labels));
  }
  return result.with_parent_map({subset.begin(), subset.end()});
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& a) {
  check_ids(x.vertex_count(), a);
  std::vector<Simplex> gens;
  for (const auto& f : x.facets()) {
    if (a.is_face_of(f)) gens.push_back(f.without(a));
  }
  if (gens.empty()) throw InvalidArgument("simplex " + a.to_string() + " is not in the complex");
  auto result = SimplicialComplex::from_generators(x.vertex_count(), std::move(gens));
  return result.with_labels({x.labels().begin(), x.labels().end()});
}

SimplicialComplex join(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  const auto shift = static_cast<VertexId>(x1.vertex_count());
  std::vector<Simplex> facets;
  for (const auto& f1 : x1.facets()) {
    for (const auto& f2 : x2.facets()) {
      std::vector<VertexId> verts(f1.begin(), f1.end());
      for (VertexId v : f2) verts.push_back(v + shift);
      facets.push_back(Simplex::from_sorted(std::move(verts)));
    }
  }
  // Unions of facet pairs from disjoint tables are pairwise incomparable.
  auto result =
      SimplicialComplex::from_antichain(x1.vertex_count() + x2.vertex_count(), std::move(facets));
  if (!x1.labels().empty() || !x2.labels().empty()) {
    std::vector<std::string> labels;
    for (VertexId v = 0; v < x1.vertex_count(); ++v) labels.push_back(x1.label(v));
    for (VertexId v = 0; v < x2.vertex_count(); ++v) labels.push_back(x2.label(v));
    result = result.with_labels(std::move(labels));
  }
  return result;
}

SimplicialComplex full_simplex(std::size_t n) {
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), VertexId{0});
  return SimplicialComplex::from_antichain(n, {Simplex::from_sorted(std::move(verts))});
}

SimplicialComplex boundary_complex(std::size_t n) {
  if (n == 0) throw InvalidArgument("boundary of the empty simplex is undefined");
  const Simplex whole = full_simplex(n).facets()[0];
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < n; ++i) facets.push_back(whole.facet_without(i));
  return SimplicialComplex::from_antichain(n, std::move(facets));
}

namespace {
void require_shared_table(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  if (x1.vertex_count() != x2.vertex_count()) {
    throw InvalidArgument("complexes do not share a vertex table (" +
                          std::to_string(x1.vertex_count()) + " vs " +
                          std::to_string(x2.vertex_count()) + " vertices)");
  }
}
}  // namespace

SimplicialComplex unite(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  require_shared_table(x1, x2);
  std::vector<Simplex> gens(x1.facets().begin(), x1.facets().end());
  gens.insert(gens.end(), x2.facets().begin(), x2.facets().end());
  auto result = SimplicialComplex::from_generators(x1.vertex_count(), std::move(gens));
  return result.with_labels({x1.labels().begin(), x1.labels().end()});
}

SimplicialComplex intersect(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  require_shared_table(x1, x2);
  std::vector<Simplex> gens;
  for (const auto& f1 : x1.facets()) {
    for (const auto& f2 : x2.facets()) gens.push_back(f1.intersected_with(f2));
  }
  auto result = SimplicialComplex::from_generators(x1.vertex_count(), std::move(gens));
  return result.with_labels({x1.labels().begin(), x1.labels().end()});
}

SimplicialComplex relabel(const SimplicialComplex& x, std::span<const VertexId> vertex_map,
                          std::size_t target_count) {
  if (vertex_map.size() != x.vertex_count()) {
    throw InvalidArgument("vertex map size does not match the vertex table");
  }
  std::vector<Simplex> facets;
  for (const auto& f : x.facets()) {
    std::vector<VertexId> image;
    for (VertexId v : f) image.push_back(vertex_map[v]);
    facets.emplace_back(std::move(image));  // throws if the map is not injective on f
  }
  return SimplicialComplex::from_generators(target_count, std::move(facets));
}

bool is_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                    std::span<const VertexId> vertex_map) {
  if (vertex_map.size() != from.vertex_count()) return false;
  const Simplex used = from.vertex_set();
  std::vector<VertexId> images;
  for (VertexId v : used) {
    if (vertex_map[v] >= to.vertex_count()) return false;
    images.push_back(vertex_map[v]);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  const auto image = relabel(from, vertex_map, to.vertex_count());
  return std::equal(image.facets().begin(), image.facets().end(), to.facets().begin(),
                    to.facets().end());
}

std::size_t connected_components(const SimplicialComplex& x) {
  std::vector<VertexId> parent(x.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&parent](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& f : x.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);
  }
  std::size_t count = 0;
  for (VertexId v : x.vertex_set()) {
    if (find(v) == v) ++count;
  }
  return count;
}

namespace {

// Order complex of {tau in K : tau contains sigma} (strict: tau != sigma).
// Maximal chains climb from the bottom to a facet one vertex at a time, so
// they are indexed by a facet containing sigma plus an ordering of the
// vertices it adds.
OrderComplex interval_order_complex(const SimplicialComplex& k, const Simplex& sigma,
                                    bool strict) {
  std::vector<const Simplex*> tops;
  for (const auto& f : k.facets()) {
    if (sigma.is_face_of(f)) tops.push_back(&f);
  }
  if (tops.empty()) throw InvalidArgument("simplex " + sigma.to_string() + " is not in K");

  std::unordered_set<Simplex, SimplexHash> members;
  for (const Simplex* top : tops) {
    const Simplex extra = top->without(sigma);
    if (extra.size() >= 31) throw GuardExceeded("facet too large for an order complex");
    for (std::size_t bits = 0; bits < (std::size_t{1} << extra.size()); ++bits) {
      if (strict && bits == 0) continue;
      std::vector<VertexId> add;
      for (std::size_t i = 0; i < extra.size(); ++i) {
        if (bits >> i & 1) add.push_back(extra[i]);
      }
      members.insert(sigma.united_with(Simplex::from_sorted(std::move(add))));
      if (members.size() > kDefaultSimplexGuard) throw GuardExceeded("order complex too large");
    }
  }

  OrderComplex out;
  out.elements.assign(members.begin(), members.end());
  std::sort(out.elements.begin(), out.elements.end(), SizeThenLex{});
  auto index_of = [&out](const Simplex& s) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), s, SizeThenLex{});
    return static_cast<VertexId>(it - out.elements.begin());
  };

  std::vector<Simplex> chains;
  std::size_t budget = kDefaultSimplexGuard;
  for (const Simplex* top : tops) {
    const Simplex extra = top->without(sigma);
    std::vector<VertexId> order(extra.begin(), extra.end());
    do {
      if (budget-- == 0) throw GuardExceeded("too many maximal chains");
      std::vector<VertexId> chain;
      Simplex current = sigma;
      if (!strict) chain.push_back(index_of(current));
      for (VertexId v : order) {
        current = current.united_with(Simplex{v});
        chain.push_back(index_of(current));
      }
      if (!chain.empty()) chains.push_back(Simplex(std::move(chain)));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  const std::size_t n = out.elements.size();
  out.complex = chains.empty() ? SimplicialComplex::void_complex(n)
                               : SimplicialComplex::from_antichain(n, std::move(chains));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : out.elements) labels.push_back(join_labels(k, e));
  out.complex = out.complex.with_labels(std::move(labels));
  return out;
}

}  // namespace

OrderComplex subdivision(const SimplicialComplex& k) {
  if (k.is_void()) throw InvalidArgument("subdivision of the void complex");
  return interval_order_complex(k, Simplex{}, /*strict=*/true);
}

std::pair<OrderComplex, OrderComplex> upper_interval(const SimplicialComplex& k,
                                                     const Simplex& sigma) {
  return {interval_order_complex(k, sigma, false), interval_order_complex(k, sigma, true)};
}

}  // namespace leraytk
