#include "leraytk/leray.hpp"

#include <algorithm>

#include "leraytk/errors.hpp"
#include "leraytk/homology.hpp"

namespace leraytk {
namespace {

// Keeps the first candidate with the strictly largest value.
struct Maximizer {
  std::size_t value = 0;
  std::optional<LerayWitness> witness;

  void offer(const SimplicialComplex& piece, const Simplex& where, std::size_t guard) {
    const int top = reduced_betti(piece, guard).top_nonzero_degree();
    if (top >= 0 && static_cast<std::size_t>(top) + 1 > value) {
      value = static_cast<std::size_t>(top) + 1;
      witness = LerayWitness{where, top};
    }
  }
};

// Calls visit(S) for every subset of `ground`, by size then lexicographically.
template <class Visit>
bool for_each_subset(const Simplex& ground, Visit&& visit) {
  const std::size_t n = ground.size();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<VertexId> subset;
      subset.reserve(size);
      for (std::size_t i : pick) subset.push_back(ground[i]);
      if (!visit(Simplex::from_sorted(std::move(subset)))) return false;
      // Advance to the next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(LerayMethod method) {
  return method == LerayMethod::kDefinition ? "definition" : "links";
}

LerayCertificate leray_by_definition(const SimplicialComplex& x, const LerayOptions& options) {
  const Simplex ground = x.vertex_set();
  if (ground.size() > options.max_vertices) {
    throw GuardExceeded("leray_by_definition: " + std::to_string(ground.size()) +
                        " vertices exceed the cap of " + std::to_string(options.max_vertices) +
                        "; use leray_by_links");
  }
  Maximizer best;
  // Nothing can beat dim + 1, so the scan stops once it is reached.
  const auto ceiling = static_cast<std::size_t>(std::max(x.dimension() + 1, 0));
  if (!x.is_void()) {
    for_each_subset(ground, [&](const Simplex& subset) {
      best.offer(induced(x, subset), subset, options.simplex_guard);
      return best.value < ceiling;
    });
  }
  return {best.value, best.witness, LerayMethod::kDefinition};
}

LerayCertificate leray_by_links(const SimplicialComplex& x, const LerayOptions& options) {
  Maximizer best;
  const auto ceiling = static_cast<std::size_t>(std::max(x.dimension() + 1, 0));
  const auto groups = x.simplices_by_size(options.simplex_guard);
  for (const auto& group : groups) {
    if (best.value >= ceiling) break;
    for (const auto& sigma : group) {
      best.offer(link(x, sigma), sigma, options.simplex_guard);
      if (best.value >= ceiling) break;
    }
  }
  return {best.value, best.witness, LerayMethod::kLinks};
}

std::size_t leray_number(const SimplicialComplex& x, const LerayOptions& options) {
  return leray_by_links(x, options).value;
}

bool verify_certificate(const SimplicialComplex& x, const LerayCertificate& certificate) {
  if (certificate.value == 0) return !certificate.witness.has_value();
  if (!certificate.witness) return false;
  const auto& w = *certificate.witness;
  if (w.degree + 1 != static_cast<int>(certificate.value)) return false;
  const SimplicialComplex piece = certificate.method == LerayMethod::kDefinition
                                      ? induced(x, w.where)
                                      : link(x, w.where);
  return reduced_betti(piece)[static_cast<std::size_t>(w.degree)] != 0;
}

ChordalReport check_chordal_characterization(const Graph& g, const LerayOptions& options) {
  ChordalReport report;
  report.chordal = is_chordal(g);
  report.leray = leray_number(clique_complex(g), options);
  report.consistent = report.chordal == (report.leray <= 1);
  return report;
}

}  // namespace leraytk
