#include "leraytk/graph.hpp"

#include <algorithm>

#include "leraytk/errors.hpp"

namespace leraytk {

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : adjacency_(vertex_count, std::vector<char>(vertex_count, 0)), neighbors_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge endpoint outside the vertex range");
    }
    if (adjacency_[u][v]) continue;
    adjacency_[u][v] = adjacency_[v][u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

// Bron-Kerbosch with pivoting; reports maximal cliques.
void bron_kerbosch(const Graph& g, std::vector<VertexId>& r, std::vector<VertexId> p,
                   std::vector<VertexId> x, std::vector<Simplex>& out) {
  if (p.empty() && x.empty()) {
    out.emplace_back(r);
    return;
  }
  VertexId pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (VertexId u : *pool) {
      const auto count = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](VertexId w) { return g.adjacent(u, w); }));
      if (count >= best) {
        best = count;
        pivot = u;
      }
    }
  }
  std::vector<VertexId> candidates;
  for (VertexId v : p) {
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  }
  for (VertexId v : candidates) {
    std::vector<VertexId> p2, x2;
    for (VertexId w : p) {
      if (g.adjacent(v, w)) p2.push_back(w);
    }
    for (VertexId w : x) {
      if (g.adjacent(v, w)) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  if (g.vertex_count() == 0) return SimplicialComplex::empty_complex();
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<Simplex> cliques;
  std::vector<VertexId> r;
  bron_kerbosch(g, r, all, {}, cliques);
  return SimplicialComplex::from_antichain(g.vertex_count(), std::move(cliques));
}

std::optional<std::vector<VertexId>> perfect_elimination_ordering(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Maximum cardinality search numbers vertices in reverse elimination order.
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<VertexId> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    bool found = false;
    for (VertexId v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (!found || weight[v] > weight[best]) {
        best = v;
        found = true;
      }
    }
    numbered[best] = 1;
    visit.push_back(best);
    for (VertexId w : g.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::vector<VertexId> order(visit.rbegin(), visit.rend());

  // Verify: for each v, its neighbours later in the order form a clique.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (VertexId v : order) {
    std::vector<VertexId> later;
    for (VertexId w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return std::nullopt;
      }
    }
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

}  // namespace leraytk
