#include "leraytk/icss.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "leraytk/errors.hpp"
#include "leraytk/homology.hpp"

namespace leraytk {
namespace {

template <class T>
int inversion_parity(std::span<const T> values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) sign = -sign;
    }
  }
  return sign;
}

std::vector<MultiPointVertex> describe(const MultiPointComplex& m, const Simplex& s) {
  std::vector<MultiPointVertex> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(m.vertices[v]);
  return out;
}

}  // namespace

std::pair<Simplex, int> SignedSimplicialMap::apply(const Simplex& s) const {
  std::vector<VertexId> image;
  image.reserve(s.size());
  for (VertexId v : s) image.push_back(vertex_map.at(v));
  const int sign = sorting_sign(image);
  return {Simplex(std::move(image)), sign};
}

int permutation_sign(std::span<const std::size_t> perm) {
  return inversion_parity(perm);
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SignedSimplicialMap sym_action(const MultiPointComplex& m, std::span<const std::size_t> perm) {
  if (!m.equal_factors) throw InvalidArgument("S_k acts only on M_k with equal factors");
  if (perm.size() != m.k) throw InvalidArgument("permutation size does not match k");
  std::vector<char> hit(m.k, 0);
  for (std::size_t j : perm) {
    if (j >= m.k || hit[j]) throw InvalidArgument("not a permutation");
    hit[j] = 1;
  }
  SignedSimplicialMap out;
  out.vertex_map.reserve(m.vertices.size());
  for (const auto& w : m.vertices) {
    MultiPointVertex image{w.part, std::vector<VertexId>(m.k)};
    for (std::size_t j = 0; j < m.k; ++j) image.coords[perm[j]] = w.coords[j];
    const auto id = m.find(image);
    if (!id) throw std::logic_error("permuted vertex missing from M_k");
    out.vertex_map.push_back(*id);
  }
  return out;
}

std::vector<std::size_t> AltChainComplex::dims() const {
  std::vector<std::size_t> out;
  for (const auto& group : cells) out.push_back(group.size());
  return out;
}

AltChainComplex alt_chain_complex(const MultiPointComplex& m, std::size_t guard) {
  if (!m.equal_factors) throw InvalidArgument("Alt is defined on M_k with equal factors");
  const auto perms = all_permutations(m.k);
  std::vector<SignedSimplicialMap> actions;
  std::vector<int> signs;
  for (const auto& p : perms) {
    actions.push_back(sym_action(m, p));
    signs.push_back(permutation_sign(p));
  }

  AltChainComplex out;
  out.k = m.k;
  const auto groups = m.complex.simplices_by_size(guard);
  if (groups.size() < 2) return out;
  const std::size_t degrees = groups.size() - 1;
  out.cells.resize(degrees);
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> rep_index(degrees);

  for (std::size_t q = 0; q < degrees; ++q) {
    std::unordered_set<Simplex, SimplexHash> visited;
    for (const auto& s : groups[q + 1]) {
      if (visited.contains(s)) continue;
      std::map<Simplex, int> orbit;
      bool killed = false;
      for (std::size_t g = 0; g < actions.size(); ++g) {
        auto [t, orientation] = actions[g].apply(s);
        const int coefficient = signs[g] * orientation;
        auto [it, inserted] = orbit.emplace(t, coefficient);
        if (!inserted && it->second != coefficient) killed = true;
        visited.insert(std::move(t));
      }
      if (killed) continue;
      // s is visited first among its orbit, so it is the least member.
      rep_index[q].emplace(s, out.cells[q].size());
      out.cells[q].push_back({describe(m, s), {orbit.begin(), orbit.end()}});
    }
  }

  out.maps.emplace_back(0, out.cells[0].size());
  for (std::size_t q = 1; q < degrees; ++q) {
    SparseIntMatrix d(out.cells[q - 1].size(), out.cells[q].size());
    for (std::size_t j = 0; j < out.cells[q].size(); ++j) {
      std::vector<SparseIntMatrix::Entry> entries;
      for (const auto& [t, coefficient] : out.cells[q][j].terms) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          auto hit = rep_index[q - 1].find(t.facet_without(i));
          if (hit == rep_index[q - 1].end()) continue;
          entries.push_back({hit->second, (i % 2 == 0 ? 1 : -1) * coefficient});
        }
      }
      d.set_column(j, std::move(entries));
    }
    out.maps.push_back(std::move(d));
  }
  return out;
}

AltChainComplex alt_chain_complex_from_sections(const PartitionedComplex& px, std::size_t k,
                                                std::size_t guard) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const auto sections = sections_by_image(px, guard);
  AltChainComplex out;
  out.k = k;
  const int top = px.complex().dimension();
  if (top < 0) return out;
  const auto degrees = static_cast<std::size_t>(top) + 1;

  struct Raw {
    const Simplex* image;
    std::vector<std::size_t> picks;  // strictly increasing indices into the section list
    std::vector<MultiPointVertex> representative;
  };
  std::vector<std::vector<Raw>> raw(degrees);
  std::size_t total = 0;
  for (const auto& [image, list] : sections) {
    if (image.empty() || list.size() < k) continue;
    const std::size_t n = list.size();
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (++total > guard) throw GuardExceeded("alternating chain basis exceeds guard");
      Raw cell{&image, pick, {}};
      for (std::size_t j = 0; j < image.size(); ++j) {
        MultiPointVertex w{image[j], std::vector<VertexId>(k)};
        for (std::size_t r = 0; r < k; ++r) w.coords[r] = list[pick[r]][j];
        cell.representative.push_back(std::move(w));
      }
      raw[image.size() - 1].push_back(std::move(cell));
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  std::vector<std::map<std::pair<Simplex, std::vector<std::size_t>>, std::size_t>> index(degrees);
  out.cells.resize(degrees);
  for (std::size_t q = 0; q < degrees; ++q) {
    std::sort(raw[q].begin(), raw[q].end(), [](const Raw& a, const Raw& b) {
      return a.representative < b.representative;
    });
    for (std::size_t c = 0; c < raw[q].size(); ++c) {
      index[q].emplace(std::make_pair(*raw[q][c].image, raw[q][c].picks), c);
      out.cells[q].push_back({raw[q][c].representative, {}});
    }
  }

  out.maps.emplace_back(0, out.cells[0].size());
  for (std::size_t q = 1; q < degrees; ++q) {
    SparseIntMatrix d(out.cells[q - 1].size(), out.cells[q].size());
    for (std::size_t c = 0; c < raw[q].size(); ++c) {
      const Simplex& image = *raw[q][c].image;
      const auto& list = sections.at(image);
      std::vector<SparseIntMatrix::Entry> entries;
      for (std::size_t j = 0; j < image.size(); ++j) {
        const Simplex face_image = image.facet_without(j);
        const auto& face_list = sections.at(face_image);
        std::vector<std::size_t> restricted;
        for (std::size_t pick : raw[q][c].picks) {
          Section s = list[pick];
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
          restricted.push_back(static_cast<std::size_t>(
              std::lower_bound(face_list.begin(), face_list.end(), s) - face_list.begin()));
        }
        const int parity = inversion_parity<std::size_t>(restricted);
        std::sort(restricted.begin(), restricted.end());
        if (std::adjacent_find(restricted.begin(), restricted.end()) != restricted.end()) {
          continue;  // the face is fixed by a transposition and dies under Alt
        }
        const std::size_t row = index[q - 1].at({face_image, restricted});
        entries.push_back({row, (j % 2 == 0 ? 1 : -1) * parity});
      }
      d.set_column(c, std::move(entries));
    }
    out.maps.push_back(std::move(d));
  }
  return out;
}

std::vector<std::size_t> alt_betti(const AltChainComplex& alt) {
  const auto dims = alt.dims();
  return homology_dimensions(dims, alt.maps);
}

std::vector<std::size_t> alt_betti(const MultiPointComplex& m, std::size_t guard) {
  return alt_betti(alt_chain_complex(m, guard));
}

std::size_t E1Page::at(std::size_t p, std::size_t q) const {
  if (p >= columns.size() || q >= columns[p].size()) return 0;
  return columns[p][q];
}

std::int64_t E1Page::signed_sum() const {
  std::int64_t sum = 0;
  for (std::size_t p = 0; p < columns.size(); ++p) {
    for (std::size_t q = 0; q < columns[p].size(); ++q) {
      sum += ((p + q) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(columns[p][q]);
    }
  }
  return sum;
}

bool E1Page::column_r_vanishes() const {
  return std::all_of(column_r.begin(), column_r.end(), [](std::size_t v) { return v == 0; });
}

E1Page e1_page(const PartitionedComplex& px, std::size_t guard) {
  E1Page page;
  page.r = fiber_bound(px).r;
  for (std::size_t p = 0; p <= page.r; ++p) {
    auto column = alt_betti(alt_chain_complex_from_sections(px, p + 1, guard));
    if (p < page.r) {
      page.columns.push_back(std::move(column));
    } else {
      page.column_r = std::move(column);
    }
  }
  page.image_betti = unreduced_betti(project(px), guard);
  return page;
}

MultiPointComplex double_point_closure(const MultiPointComplex& m) {
  if (!m.equal_factors) throw InvalidArgument("D^k is defined on M_k with equal factors");
  // Distinctness is inherited by cofaces, so qualifying facets generate D^k.
  std::vector<Simplex> kept;
  for (const auto& f : m.complex.facets()) {
    bool distinct = true;
    for (std::size_t r = 0; r < m.k && distinct; ++r) {
      for (std::size_t s = r + 1; s < m.k && distinct; ++s) {
        distinct = std::any_of(f.begin(), f.end(), [&](VertexId v) {
          return m.vertices[v].coords[r] != m.vertices[v].coords[s];
        });
      }
    }
    if (distinct) kept.push_back(f);
  }
  MultiPointComplex out = m;
  const std::size_t n = m.vertices.size();
  auto complex = kept.empty() ? SimplicialComplex::void_complex(n)
                              : SimplicialComplex::from_antichain(n, std::move(kept));
  out.complex = complex.with_labels({m.complex.labels().begin(), m.complex.labels().end()});
  return out;
}

std::vector<std::vector<Simplex>> alt_representatives(const MultiPointComplex& m,
                                                     std::size_t guard) {
  if (!m.equal_factors) throw InvalidArgument("Alt is defined on M_k with equal factors");
  const auto groups = m.complex.simplices_by_size(guard);
  std::vector<std::vector<Simplex>> reps(groups.empty() ? 0 : groups.size() - 1);
  std::vector<std::vector<VertexId>> columns(m.k);
  for (std::size_t q = 0; q < reps.size(); ++q) {
    for (const auto& s : groups[q + 1]) {
      for (std::size_t j = 0; j < m.k; ++j) {
        columns[j].clear();
        for (VertexId v : s) columns[j].push_back(m.vertices[v].coords[j]);
      }
      bool increasing = true;
      for (std::size_t j = 1; j < m.k && increasing; ++j) increasing = columns[j - 1] < columns[j];
      if (increasing) reps[q].push_back(s);
    }
  }
  return reps;
}

AltChainIsoReport check_alt_chain_iso(const MultiPointComplex& m, std::size_t guard) {
  const auto on_m = alt_representatives(m, guard);
  const auto on_d = alt_representatives(double_point_closure(m), guard);
  AltChainIsoReport report;
  for (const auto& cells : on_m) report.dims_multiple_point.push_back(cells.size());
  for (const auto& cells : on_d) report.dims_double_point.push_back(cells.size());
  auto trimmed = [](std::vector<std::size_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  report.equal_dimensions =
      trimmed(report.dims_multiple_point) == trimmed(report.dims_double_point);
  // Both sides list representatives in the same (lexicographic) order, and
  // the orbit of a representative with distinct columns lies in D^k.
  bool same = report.equal_dimensions;
  for (std::size_t q = 0; same && q < std::min(on_m.size(), on_d.size()); ++q) {
    same = on_m[q] == on_d[q];
  }
  report.bijective = same;
  return report;
}

EulerReport check_euler(const E1Page& page) {
  EulerReport report;
  for (std::size_t q = 0; q < page.image_betti.size(); ++q) {
    report.chi_image += (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(page.image_betti[q]);
  }
  report.page_sum = page.signed_sum();
  report.holds = report.chi_image == report.page_sum;
  return report;
}

ProofVanishingReport check_proof_vanishing(const E1Page& page, std::size_t leray_x) {
  ProofVanishingReport report;
  report.leray_x = leray_x;
  report.r = page.r;
  report.threshold = page.r * leray_x + page.r - 1;
  for (std::size_t p = 0; p < page.columns.size(); ++p) {
    for (std::size_t q = 1; q < page.columns[p].size(); ++q) {
      if (p + q >= report.threshold && page.columns[p][q] != 0) {
        report.violations.emplace_back(p, q);
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace leraytk
