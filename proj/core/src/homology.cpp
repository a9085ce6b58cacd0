#include "leraytk/homology.hpp"

#include <algorithm>

namespace leraytk {

ChainBoundary boundary_matrices(const SimplicialComplex& x, std::size_t guard) {
  ChainBoundary out;
  out.basis = x.simplices_by_size(guard);
  if (out.basis.size() < 2) return out;  // void or {} : no positive-degree chains

  for (std::size_t size = 1; size < out.basis.size(); ++size) {
    const auto& cells = out.basis[size];
    const auto& faces = out.basis[size - 1];
    SparseIntMatrix d(faces.size(), cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      std::vector<SparseIntMatrix::Entry> entries;
      entries.reserve(size);
      for (std::size_t i = 0; i < size; ++i) {
        const Simplex face = cells[j].facet_without(i);
        const auto row = static_cast<std::size_t>(
            std::lower_bound(faces.begin(), faces.end(), face) - faces.begin());
        entries.push_back({row, (i % 2 == 0) ? 1 : -1});
      }
      d.set_column(j, std::move(entries));
    }
    out.maps.push_back(std::move(d));
  }
  return out;
}

int BettiVector::top_nonzero_degree() const {
  for (std::size_t q = reduced.size(); q-- > 0;) {
    if (reduced[q] != 0) return static_cast<int>(q);
  }
  return -1;
}

bool BettiVector::acyclic() const {
  return minus_one == 0 && top_nonzero_degree() < 0;
}

std::vector<std::size_t> homology_dimensions(std::span<const std::size_t> dims,
                                             std::span<const SparseIntMatrix> maps) {
  std::vector<std::size_t> ranks(maps.size() + 1, 0);
  for (std::size_t q = 0; q < maps.size(); ++q) ranks[q] = exact_rank(maps[q]);
  std::vector<std::size_t> out(dims.size(), 0);
  for (std::size_t q = 0; q < dims.size(); ++q) {
    const std::size_t in = q < ranks.size() ? ranks[q] : 0;
    const std::size_t from_above = q + 1 < ranks.size() ? ranks[q + 1] : 0;
    out[q] = dims[q] - in - from_above;
  }
  return out;
}

BettiVector reduced_betti(const SimplicialComplex& x, std::size_t guard) {
  BettiVector b;
  if (x.is_void()) return b;
  const ChainBoundary chains = boundary_matrices(x, guard);
  // Degree -1 sits at index 0 of `dims`; maps shift by one accordingly.
  std::vector<std::size_t> dims;
  for (const auto& group : chains.basis) dims.push_back(group.size());
  std::vector<SparseIntMatrix> maps;
  maps.emplace_back(0, 1);  // nothing below degree -1
  for (const auto& m : chains.maps) maps.push_back(m);
  const auto h = homology_dimensions(dims, maps);
  b.minus_one = h[0];
  b.reduced.assign(h.begin() + 1, h.end());
  for (std::size_t q = 1; q < dims.size(); ++q) {
    b.euler += (q % 2 == 1 ? 1 : -1) * static_cast<std::int64_t>(dims[q]);
  }
  return b;
}

std::vector<std::size_t> unreduced_betti(const SimplicialComplex& x, std::size_t guard) {
  const BettiVector b = reduced_betti(x, guard);
  std::vector<std::size_t> out = b.reduced;
  if (!out.empty()) out[0] += 1;
  return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& x, std::size_t guard) {
  std::int64_t chi = 0;
  const auto f = x.face_counts(guard);
  for (std::size_t q = 0; q < f.size(); ++q) {
    chi += (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[q]);
  }
  return chi;
}

}  // namespace leraytk
