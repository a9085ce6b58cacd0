#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace oracle {
namespace {

std::size_t size_of(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::vector<Mask> of_size(const std::vector<Mask>& faces, std::size_t s) {
  std::vector<Mask> out;
  for (Mask f : faces) {
    if (size_of(f) == s) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> vertices_of(Mask m) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < 32; ++i) {
    if (m & (Mask{1} << i)) v.push_back(i);
  }
  return v;
}

Matrix to_q(const std::vector<std::vector<Z>>& m) {
  Matrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), m = b.size(), p = b[0].size();
  Matrix out(n, std::vector<Q>(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  }
  return out;
}

// Parity of the permutation that sorts `v` (distinct entries).
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

std::vector<std::size_t> unreduced(const std::vector<std::size_t>& reduced, bool is_void) {
  std::vector<std::size_t> out(reduced.size() > 1 ? reduced.size() - 1 : 1, 0);
  if (is_void) return out;
  for (std::size_t q = 0; q + 1 < reduced.size(); ++q) out[q] = reduced[q + 1];
  out[0] = out[0] + 1 - reduced[0];
  return out;
}

}  // namespace

std::vector<Mask> faces(const leraytk::SimplicialComplex& x) {
  std::set<Mask> all;
  for (const auto& f : x.facets()) {
    Mask m = 0;
    for (auto v : f) m |= Mask{1} << v;
    for (Mask s = m;; s = (s - 1) & m) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return {all.begin(), all.end()};
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Z> smith_invariants(std::vector<std::vector<Z>> m) {
  std::vector<Z> out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the remaining block to (t, t) and
    // clear its row and column; repeat until it divides everything left.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return out;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Z q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Z q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols && divides; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            divides = false;
            for (std::size_t l = t; l < cols; ++l) m[t][l] += m[i][l];
          }
        }
      }
      if (divides) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

std::vector<std::vector<Z>> boundary(const std::vector<Mask>& faces, std::size_t q) {
  const auto rows = of_size(faces, q);
  const auto cols = of_size(faces, q + 1);
  std::map<Mask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  std::vector<std::vector<Z>> m(rows.size(), std::vector<Z>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto vs = vertices_of(cols[c]);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Mask face = cols[c] & ~(Mask{1} << vs[i]);
      m[row_index.at(face)][c] = i % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

std::vector<std::size_t> reduced_betti(const std::vector<Mask>& faces) {
  std::size_t top = 0;
  for (Mask f : faces) top = std::max(top, size_of(f));
  if (faces.empty()) return {0};
  std::vector<std::size_t> ranks(top + 2, 0);  // ranks[s]: boundary from size s
  for (std::size_t s = 1; s <= top; ++s) ranks[s] = rank(to_q(boundary(faces, s - 1)));
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= top; ++s) {
    out.push_back(of_size(faces, s).size() - ranks[s] - ranks[s + 1]);
  }
  return out;
}

std::vector<std::size_t> reduced_betti(const leraytk::SimplicialComplex& x) {
  return reduced_betti(faces(x));
}

std::size_t leray(const leraytk::SimplicialComplex& x) {
  const auto all = faces(x);
  Mask vertices = 0;
  for (Mask f : all) {
    if (size_of(f) == 1) vertices |= f;
  }
  std::size_t best = 0;
  for (Mask s = vertices;; s = (s - 1) & vertices) {
    std::vector<Mask> sub;
    for (Mask f : all) {
      if ((f & ~s) == 0) sub.push_back(f);
    }
    const auto b = reduced_betti(sub);
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (b[i] != 0) best = std::max(best, i);  // degree i - 1
    }
    if (s == 0) break;
  }
  return best;
}

bool chordal(const leraytk::Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool has_simplicial = false;
    for (std::size_t v : vertices_of(s)) {
      bool clique = true;
      for (std::size_t a : vertices_of(s)) {
        for (std::size_t b : vertices_of(s)) {
          if (a < b && a != v && b != v && g.adjacent(v, a) && g.adjacent(v, b) &&
              !g.adjacent(a, b)) {
            clique = false;
          }
        }
      }
      has_simplicial = has_simplicial || clique;
    }
    if (!has_simplicial) return false;
  }
  return true;
}

std::size_t fiber_bound(const leraytk::PartitionedComplex& px) {
  std::map<Mask, std::size_t> per_image;
  for (Mask f : faces(px.complex())) {
    Mask image = 0;
    for (auto v : vertices_of(f)) image |= Mask{1} << px.part_of(static_cast<leraytk::VertexId>(v));
    if (image != 0) ++per_image[image];
  }
  std::size_t best = 0;
  for (const auto& [image, n] : per_image) best = std::max(best, n);
  return best;
}

std::vector<std::size_t> image_betti(const leraytk::PartitionedComplex& px) {
  std::set<Mask> image;
  for (Mask f : faces(px.complex())) {
    Mask m = 0;
    for (auto v : vertices_of(f)) m |= Mask{1} << px.part_of(static_cast<leraytk::VertexId>(v));
    image.insert(m);
  }
  return unreduced(reduced_betti(std::vector<Mask>(image.begin(), image.end())),
                   px.complex().is_void());
}

std::vector<std::size_t> alt_betti(const leraytk::PartitionedComplex& px, std::size_t k) {
  const auto x_faces = faces(px.complex());
  const std::set<Mask> in_x(x_faces.begin(), x_faces.end());

  // M_k vertices keyed by (coordinates, part): a different order from the
  // library's, so orientation signs of the action are exercised.
  struct W {
    std::vector<int> coords;
    int part;
    bool operator<(const W& o) const {
      return coords != o.coords ? coords < o.coords : part < o.part;
    }
  };
  std::vector<W> ws;
  for (std::size_t i = 0; i < px.part_count(); ++i) {
    const auto& part = px.parts()[i];
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      W w{{}, static_cast<int>(i)};
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        w.coords.push_back(static_cast<int>(part[idx[j]]));
        ok = ok && in_x.count(Mask{1} << part[idx[j]]) != 0;
      }
      if (ok) ws.push_back(w);
      std::size_t j = k;
      while (j > 0 && ++idx[j - 1] == part.size()) idx[--j] = 0;
      if (j == 0) break;
    }
  }
  std::sort(ws.begin(), ws.end());
  std::map<W, int> index;
  for (std::size_t i = 0; i < ws.size(); ++i) index[ws[i]] = static_cast<int>(i);

  auto valid = [&](const std::vector<int>& s) {
    std::set<int> parts;
    for (int v : s) parts.insert(ws[v].part);
    if (parts.size() != s.size()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      Mask m = 0;
      for (int v : s) m |= Mask{1} << ws[v].coords[j];
      if (!in_x.count(m)) return false;
    }
    return true;
  };
  std::vector<std::vector<std::vector<int>>> cells(1);  // cells[q]: q-simplices
  std::vector<std::vector<int>> frontier;
  for (std::size_t v = 0; v < ws.size(); ++v) frontier.push_back({static_cast<int>(v)});
  cells[0] = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int v = s.back() + 1; v < static_cast<int>(ws.size()); ++v) {
        auto t = s;
        t.push_back(v);
        if (valid(t)) next.push_back(t);
      }
    }
    if (!next.empty()) cells.push_back(next);
    frontier = std::move(next);
  }
  std::vector<std::map<std::vector<int>, std::size_t>> cell_index(cells.size());
  for (std::size_t q = 0; q < cells.size(); ++q) {
    for (std::size_t i = 0; i < cells[q].size(); ++i) cell_index[q][cells[q][i]] = i;
  }

  std::vector<std::size_t> perm(k);
  for (std::size_t j = 0; j < k; ++j) perm[j] = j;
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Matrix> projector, bd;
  for (std::size_t q = 0; q < cells.size(); ++q) {
    const std::size_t n = cells[q].size();
    Matrix a(n, std::vector<Q>(n));
    for (const auto& g : perms) {
      std::vector<int> gi(g.begin(), g.end());
      const int g_sign = sort_sign(gi);
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<int> image;
        for (int v : cells[q][c]) {
          W w{std::vector<int>(k), ws[v].part};
          for (std::size_t j = 0; j < k; ++j) w.coords[g[j]] = ws[v].coords[j];
          image.push_back(index.at(w));
        }
        const int orient = sort_sign(image);
        a[cell_index[q].at(image)][c] += g_sign * orient;
      }
    }
    projector.push_back(std::move(a));
    Matrix d(q == 0 ? 0 : cells[q - 1].size(), std::vector<Q>(n));
    if (q > 0) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < cells[q][c].size(); ++i) {
          auto face = cells[q][c];
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          d[cell_index[q - 1].at(face)][c] = i % 2 == 0 ? 1 : -1;
        }
      }
    }
    bd.push_back(std::move(d));
  }

  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < cells.size(); ++q) {
    const std::size_t dim = rank(projector[q]);
    const std::size_t out_rank = q == 0 ? 0 : rank(multiply(bd[q], projector[q]));
    const std::size_t in_rank =
        q + 1 < cells.size() ? rank(multiply(bd[q + 1], projector[q + 1])) : 0;
    out.push_back(dim - out_rank - in_rank);
  }
  return out;
}

LatticeSet lattice_points(const std::vector<leraytk::Box>& pieces, std::int64_t extent) {
  std::set<std::vector<std::int64_t>> pts;
  for (const auto& b : pieces) {
    if (b.empty()) continue;
    const std::size_t d = b.dimension();
    std::vector<std::int64_t> lo(d), hi(d);
    bool any = true;
    for (std::size_t a = 0; a < d; ++a) {
      lo[a] = 0;
      hi[a] = extent;
      while (lo[a] <= extent && Q(lo[a]) < b.axes()[a].lo) ++lo[a];
      while (hi[a] >= 0 && Q(hi[a]) > b.axes()[a].hi) --hi[a];
      any = any && lo[a] <= hi[a];
    }
    if (!any) continue;
    std::vector<std::int64_t> p = lo;
    for (;;) {
      pts.insert(p);
      std::size_t a = 0;
      while (a < d && ++p[a] > hi[a]) {
        p[a] = lo[a];
        ++a;
      }
      if (a == d) break;
    }
  }
  return {{pts.begin(), pts.end()}};
}

std::size_t helly(const std::vector<LatticeSet>& family) {
  const std::size_t n = family.size();
  const Mask total = Mask{1} << n;
  std::vector<char> meets(total);
  for (Mask s = 0; s < total; ++s) {
    if (s == 0) {
      meets[s] = 1;
      continue;
    }
    std::vector<std::vector<std::int64_t>> common;
    bool first = true;
    for (std::size_t i : vertices_of(s)) {
      if (first) {
        common = family[i].points;
        first = false;
      } else {
        std::vector<std::vector<std::int64_t>> next;
        std::set_intersection(common.begin(), common.end(), family[i].points.begin(),
                              family[i].points.end(), std::back_inserter(next));
        common = std::move(next);
      }
    }
    meets[s] = common.empty() ? 0 : 1;
  }
  for (std::size_t h = 1;; ++h) {
    bool ok = true;
    for (Mask s = 0; s < total && ok; ++s) {
      bool small_meet = true;
      for (Mask t = s;; t = (t - 1) & s) {
        if (size_of(t) <= h && !meets[t]) small_meet = false;
        if (t == 0) break;
      }
      if (small_meet && !meets[s]) ok = false;
    }
    if (ok) return h;
  }
}

}  // namespace oracle
