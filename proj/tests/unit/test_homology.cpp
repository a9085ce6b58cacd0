#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "leraytk/homology.hpp"
#include "oracles.hpp"

using namespace leraytk;

TEST_CASE("boundary of an edge: -1 on the first vertex, +1 on the second") {
  const auto b = boundary_matrices(full_simplex(2));
  REQUIRE(b.maps.size() == 2);
  const auto& d1 = b.boundary(1);
  CHECK(d1.rows() == 2);
  CHECK(d1.cols() == 1);
  CHECK(d1.at(0, 0) == -1);
  CHECK(d1.at(1, 0) == 1);
  // Degree 0 is the augmentation.
  CHECK(b.boundary(0).at(0, 0) == 1);
  CHECK(b.boundary(0).at(0, 1) == 1);
}

TEST_CASE("boundary ranks of triangles") {
  const auto hollow = boundary_matrices(fixtures::hollow_triangle());
  CHECK(hollow.boundary(1).rows() == 3);
  CHECK(hollow.boundary(1).cols() == 3);
  CHECK(exact_rank(hollow.boundary(1)) == 2);
  const auto solid = boundary_matrices(fixtures::solid_triangle());
  CHECK(exact_rank(solid.boundary(2)) == 1);
}

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& x : fixtures::corpus(30, 8)) {
    const auto b = boundary_matrices(x);
    for (int q = 1; q <= b.top_degree(); ++q) {
      CHECK((b.boundary(q - 1) * b.boundary(q)).is_zero());
    }
  }
}

TEST_CASE("reduced Betti numbers of small complexes") {
  CHECK(reduced_betti(fixtures::hollow_triangle()).reduced == std::vector<std::size_t>{0, 1});
  CHECK(reduced_betti(fixtures::two_points()).reduced == std::vector<std::size_t>{1});
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = reduced_betti(boundary_complex(n));
    for (std::size_t q = 0; q + 2 <= n; ++q) CHECK(b[q] == (q == n - 2 ? 1u : 0u));
  }
  const auto e = reduced_betti(SimplicialComplex::empty_complex());
  CHECK(e.minus_one == 1);
  CHECK_FALSE(e.acyclic());
  CHECK(reduced_betti(SimplicialComplex::void_complex()).acyclic());
}

TEST_CASE("seven-vertex torus") {
  const auto t = fixtures::torus7();
  CHECK(t.face_counts() == std::vector<std::size_t>{7, 21, 14});
  CHECK(reduced_betti(t).reduced == std::vector<std::size_t>{0, 2, 1});
  CHECK(euler_characteristic(t) == 0);
  // Integer check: no torsion, so the Smith invariants of each boundary map
  // are all 1 and the ranks give (0, 2, 1).
  const auto faces = oracle::faces(t);
  const auto d1 = oracle::smith_invariants(oracle::boundary(faces, 1));
  const auto d2 = oracle::smith_invariants(oracle::boundary(faces, 2));
  CHECK(d1.size() == 6);
  CHECK(d2.size() == 13);
  CHECK(std::all_of(d1.begin(), d1.end(), [](const auto& v) { return v == 1; }));
  CHECK(std::all_of(d2.begin(), d2.end(), [](const auto& v) { return v == 1; }));
  CHECK(oracle::reduced_betti(t) == std::vector<std::size_t>{0, 0, 2, 1});
}

TEST_CASE("unreduced Betti numbers and Euler characteristic") {
  CHECK(unreduced_betti(full_simplex(1)) == std::vector<std::size_t>{1});
  CHECK(euler_characteristic(full_simplex(1)) == 1);
  CHECK(euler_characteristic(boundary_complex(4)) == 2);
  const auto px = extremal_example(2, 2);
  CHECK(unreduced_betti(px.complex()) == std::vector<std::size_t>{2, 0, 0});
}

TEST_CASE("Betti numbers match the rational-rank oracle") {
  for (const auto& x : fixtures::corpus(60, 9, 101)) {
    const auto b = reduced_betti(x);
    const auto o = oracle::reduced_betti(x);
    REQUIRE(!o.empty());
    CHECK(b.minus_one == o[0]);
    for (std::size_t q = 0; q + 1 < o.size(); ++q) CHECK(b[q] == o[q + 1]);
  }
}

TEST_CASE("Euler characteristic is the alternating face count") {
  for (const auto& x : fixtures::corpus(40, 9, 202)) {
    const auto f = x.face_counts();
    std::int64_t chi = 0;
    for (std::size_t q = 0; q < f.size(); ++q) chi += (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[q]);
    CHECK(euler_characteristic(x) == chi);
  }
}

TEST_CASE("Betti numbers are invariant under relabeling") {
  for (const auto& x : fixtures::corpus(25, 8, 303)) {
    std::vector<VertexId> map(x.vertex_count());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<VertexId>(map.size() - 1 - v);
    CounterRng rng(x.vertex_count(), 1);
    for (std::size_t i = map.size(); i > 1; --i) std::swap(map[i - 1], map[rng.below(i)]);
    CHECK(reduced_betti(relabel(x, map, x.vertex_count())) == reduced_betti(x));
  }
}
