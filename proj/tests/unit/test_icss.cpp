#include <doctest.h>

#include "fixtures.hpp"
#include "leraytk/errors.hpp"
#include "leraytk/homology.hpp"
#include "leraytk/icss.hpp"
#include "leraytk/leray.hpp"
#include "oracles.hpp"

using namespace leraytk;

TEST_CASE("permutations") {
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == std::vector<std::size_t>{0, 1, 2});
  CHECK(all_permutations(3).back() == std::vector<std::size_t>{2, 1, 0});
  CHECK(permutation_sign(std::vector<std::size_t>{0, 1, 2}) == 1);
  CHECK(permutation_sign(std::vector<std::size_t>{1, 0, 2}) == -1);
  CHECK(permutation_sign(std::vector<std::size_t>{1, 2, 0}) == 1);
  CHECK(permutation_sign(std::vector<std::size_t>{3, 2, 1, 0}) == 1);
}

TEST_CASE("the action swaps coordinates") {
  const auto m = multiple_point_complex(fixtures::two_points_one_part(), 2);
  const std::vector<std::size_t> swap{1, 0};
  const auto act = sym_action(m, swap);
  const auto ab = *m.find({0, {0, 1}});
  const auto ba = *m.find({0, {1, 0}});
  const auto aa = *m.find({0, {0, 0}});
  CHECK(act.vertex_map[ab] == ba);
  CHECK(act.vertex_map[aa] == aa);
  CHECK(act.apply(Simplex{ab}) == std::pair<Simplex, int>{Simplex{ba}, 1});

  const auto edge = PartitionedComplex(full_simplex(2), {{0}, {1}});
  const auto points = PartitionedComplex(fixtures::two_points(), {{0}, {1}});
  const std::vector<PartitionedComplex> unequal{edge, points};
  CHECK_THROWS_AS(sym_action(generalized_mpc(unequal), swap), InvalidArgument);
}

TEST_CASE("orientation signs of the action") {
  // Two parts, two points each, full join: the swap reverses no vertex order
  // inside a simplex here, since simplices are listed by part.
  const auto x = make_complex({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto px = PartitionedComplex(x, {{0, 1}, {2, 3}});
  const auto m = multiple_point_complex(px, 2);
  const std::vector<std::size_t> swap{1, 0};
  const auto act = sym_action(m, swap);
  for (const auto& f : m.complex.facets()) CHECK(act.apply(f).second == 1);
  // A non-monotone vertex map does reverse orientations.
  SignedSimplicialMap flip{{1, 0}};
  CHECK(flip.apply(Simplex{0, 1}) == std::pair<Simplex, int>{Simplex{0, 1}, -1});
}

TEST_CASE("k = 1 leaves the chain complex unchanged") {
  for (const auto& x : fixtures::corpus(10, 7, 3)) {
    const auto px = fixtures::singleton_parts(x);
    const auto alt = alt_chain_complex(multiple_point_complex(px, 1));
    CHECK(alt_betti(alt) == unreduced_betti(x));
    const auto faces = x.face_counts();
    CHECK(alt.dims() == faces);
  }
}

TEST_CASE("two points") {
  const auto px = fixtures::two_points_one_part();
  const auto m = multiple_point_complex(px, 2);
  const auto alt = alt_chain_complex(m);
  CHECK(alt.dims() == std::vector<std::size_t>{1});
  REQUIRE(alt.cells[0].size() == 1);
  CHECK(alt.cells[0][0].representative == std::vector<MultiPointVertex>{{0, {0, 1}}});
  CHECK(alt.cells[0][0].terms.size() == 2);
  CHECK(alt_betti(alt) == std::vector<std::size_t>{1});

  const auto d = double_point_closure(m);
  // Same vertex table as M_2; only the off-diagonal vertices are simplices.
  CHECK(d.vertices == m.vertices);
  CHECK(d.complex.vertex_set() == Simplex{*m.find({0, {0, 1}}), *m.find({0, {1, 0}})});
  const auto iso = check_alt_chain_iso(m);
  CHECK(iso.equal_dimensions);
  CHECK(iso.bijective);
}

TEST_CASE("section route equals the orbit route") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto px = random_instance({3, 3, 2, 9}, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto orbit = alt_chain_complex(multiple_point_complex(px, k));
      const auto sections = alt_chain_complex_from_sections(px, k);
      auto trim = [](std::vector<std::size_t> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
      };
      CHECK(trim(orbit.dims()) == trim(sections.dims()));
      const std::size_t degrees = std::min(orbit.cells.size(), sections.cells.size());
      for (std::size_t q = 0; q < degrees; ++q) {
        REQUIRE(orbit.cells[q].size() == sections.cells[q].size());
        for (std::size_t c = 0; c < orbit.cells[q].size(); ++c) {
          CHECK(orbit.cells[q][c].representative == sections.cells[q][c].representative);
        }
        CHECK(orbit.maps[q] == sections.maps[q]);
      }
      CHECK(trim(alt_betti(orbit)) == trim(alt_betti(sections)));
    }
  }
}

TEST_CASE("alternating homology agrees with the projector oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto px = random_instance({3, 2, 2, 6}, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto ours = alt_betti(alt_chain_complex_from_sections(px, k));
      auto theirs = oracle::alt_betti(px, k);
      while (!ours.empty() && ours.back() == 0) ours.pop_back();
      while (!theirs.empty() && theirs.back() == 0) theirs.pop_back();
      CHECK(ours == theirs);
    }
  }
  const auto extremal = extremal_example(2, 2);
  auto ours = alt_betti(alt_chain_complex_from_sections(extremal, 2));
  auto theirs = oracle::alt_betti(extremal, 2);
  ours.resize(4);
  theirs.resize(4);
  CHECK(ours == theirs);
}

TEST_CASE("boundary commutes with the action") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto px = random_instance({3, 3, 2, 9}, seed);
    const auto m = multiple_point_complex(px, 3);
    const auto chains = boundary_matrices(m.complex);
    for (const auto& perm : all_permutations(3)) {
      const auto act = sym_action(m, perm);
      for (int q = 1; q <= chains.top_degree(); ++q) {
        const auto& cols = chains.basis[static_cast<std::size_t>(q) + 1];
        for (const auto& s : cols) {
          // g(d s) and d(g s) as maps from simplices to coefficients.
          std::map<Simplex, int> lhs;
          std::map<Simplex, int> rhs;
          for (std::size_t i = 0; i < s.size(); ++i) {
            auto [t, sign] = act.apply(s.facet_without(i));
            lhs[t] += (i % 2 == 0 ? 1 : -1) * sign;
          }
          auto [gs, sign] = act.apply(s);
          for (std::size_t i = 0; i < gs.size(); ++i) {
            rhs[gs.facet_without(i)] += (i % 2 == 0 ? 1 : -1) * sign;
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("E1 page of two points") {
  const auto page = e1_page(fixtures::two_points_one_part());
  CHECK(page.r == 2);
  REQUIRE(page.columns.size() == 2);
  CHECK(page.columns[0] == std::vector<std::size_t>{2});
  CHECK(page.columns[1] == std::vector<std::size_t>{1});
  CHECK(page.signed_sum() == 1);
  CHECK(page.column_r_vanishes());
  CHECK(page.image_betti == std::vector<std::size_t>{1});
  const auto euler = check_euler(page);
  CHECK(euler.chi_image == 1);
  CHECK(euler.holds);
}

TEST_CASE("E1 page of the extremal family") {
  const auto px = extremal_example(2, 2);
  const auto page = e1_page(px);
  CHECK(page.r == 2);
  CHECK(page.column_r_vanishes());
  // pi(X) is the boundary of a 3-simplex.
  CHECK(page.image_betti == std::vector<std::size_t>{1, 0, 1});
  CHECK(page.signed_sum() == 2);
  CHECK(check_euler(page).holds);
  const auto vanishing = check_proof_vanishing(page, leray_number(px.complex()));
  CHECK(vanishing.leray_x == 1);
  CHECK(vanishing.threshold == 3);
  CHECK(vanishing.holds);
  for (std::size_t p = 0; p <= 1; ++p) {
    for (std::size_t q = 1; q < 6; ++q) {
      if (p + q >= 3) CHECK(page.at(p, q) == 0);
    }
  }
}

TEST_CASE("page invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto px = random_instance({4, 3, 2, 12}, seed);
    const auto page = e1_page(px);
    CHECK(page.column_r_vanishes());
    CHECK(check_euler(page).holds);
    CHECK(check_proof_vanishing(page, leray_number(px.complex())).holds);
  }
}

TEST_CASE("alternating chains of D^k and M_k") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto px = random_instance({3, 3, 2, 9}, seed);
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto m = multiple_point_complex(px, k);
      const auto iso = check_alt_chain_iso(m);
      CHECK(iso.equal_dimensions);
      CHECK(iso.bijective);
      const auto reps = alt_representatives(m);
      const auto alt = alt_chain_complex(m);
      std::vector<std::size_t> rep_dims;
      for (const auto& r : reps) rep_dims.push_back(r.size());
      while (!rep_dims.empty() && rep_dims.back() == 0) rep_dims.pop_back();
      auto dims = alt.dims();
      while (!dims.empty() && dims.back() == 0) dims.pop_back();
      CHECK(rep_dims == dims);
    }
  }
  CHECK_THROWS_AS(
      alt_chain_complex(generalized_mpc(std::vector<PartitionedComplex>{
          fixtures::two_points_one_part(),
          PartitionedComplex(SimplicialComplex::from_generators(2, {Simplex{0}}), {{0, 1}})})),
      InvalidArgument);
}
