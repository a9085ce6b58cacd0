#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "leraytk/errors.hpp"
#include "leraytk/homology.hpp"
#include "leraytk/icss.hpp"
#include "leraytk/multipoint.hpp"

using namespace leraytk;

namespace {

PartitionedComplex with_parts(const SimplicialComplex& x, const PartitionedComplex& like) {
  return PartitionedComplex(x, like.parts());
}

}  // namespace

TEST_CASE("one point is X itself") {
  const auto px = extremal_example(2, 2);
  const auto m = multiple_point_complex(px, 1);
  CHECK(m.complex.facets().size() == px.complex().facets().size());
  CHECK(reduced_betti(m.complex) == reduced_betti(px.complex()));
  std::vector<VertexId> map = m.coordinate_map(0);
  CHECK(is_isomorphism(m.complex, px.complex(), map));
}

TEST_CASE("two points in one part, k = 2") {
  const auto m = multiple_point_complex(fixtures::two_points_one_part(), 2);
  CHECK(m.vertices.size() == 4);
  CHECK(m.complex.facets().size() == 4);
  CHECK(m.complex.dimension() == 0);
  CHECK(m.find({0, {0, 1}}).has_value());
  CHECK(m.complex.label(*m.find({0, {0, 1}})) == "0:(0,1)");
}

TEST_CASE("singleton parts give the diagonal") {
  const auto x = fixtures::torus7();
  const auto px = fixtures::singleton_parts(x);
  const auto m = multiple_point_complex(px, 2);
  CHECK(is_isomorphism(m.complex, x, m.coordinate_map(0)));
  // Different factors intersect.
  const auto y = relabel(x, std::vector<VertexId>{1, 2, 3, 4, 5, 6, 0}, 7);
  const std::vector<PartitionedComplex> factors{px, with_parts(y, px)};
  const auto g = generalized_mpc(factors);
  CHECK(is_isomorphism(g.complex, intersect(x, y), g.coordinate_map(0)));
}

TEST_CASE("a simplex factor cuts out an induced subcomplex") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto px = random_instance({4, 3, 2, 12}, seed);
    const auto& x = px.complex();
    for (const auto& sigma : x.facets()) {
      std::vector<Simplex> gens{sigma};
      const auto sigma_complex = SimplicialComplex::from_generators(x.vertex_count(), gens);
      const std::vector<PartitionedComplex> factors{px, with_parts(sigma_complex, px)};
      const auto m = generalized_mpc(factors);
      const Simplex closure = tilde_closure(px, sigma);
      const auto sub = induced(x, closure);
      // (i, (v, w)) -> position of v in the closure.
      std::vector<VertexId> map;
      for (const auto& w : m.vertices) {
        const auto it = std::find(closure.begin(), closure.end(), w.coords[0]);
        map.push_back(static_cast<VertexId>(it - closure.begin()));
      }
      CHECK(is_isomorphism(m.complex, sub, map));
    }
  }
}

TEST_CASE("void factor gives the void complex; unequal parts are rejected") {
  const auto px = fixtures::two_points_one_part();
  const auto v = PartitionedComplex(SimplicialComplex::void_complex(2), {{0, 1}});
  const std::vector<PartitionedComplex> factors{px, v};
  CHECK(generalized_mpc(factors).complex.is_void());
  const auto other = PartitionedComplex(fixtures::two_points(), {{0}, {1}});
  const std::vector<PartitionedComplex> bad{px, other};
  CHECK_THROWS_AS(generalized_mpc(bad), InvalidArgument);
}

TEST_CASE("guards") {
  MultiPointOptions tight;
  tight.vertex_guard = 3;
  CHECK_THROWS_AS(multiple_point_complex(fixtures::two_points_one_part(), 2, tight), GuardExceeded);
  MultiPointOptions few;
  few.simplex_guard = 10;
  CHECK_THROWS_AS(multiple_point_complex(extremal_example(2, 2), 3, few), GuardExceeded);
}

TEST_CASE("the coordinate action maps M_k onto itself") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto px = random_instance({3, 3, 2, 9}, seed);
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto m = multiple_point_complex(px, k);
      for (const auto& perm : all_permutations(k)) {
        const auto act = sym_action(m, perm);
        for (const auto& f : m.complex.facets()) {
          CHECK(m.complex.contains(act.apply(f).first));
        }
      }
    }
  }
}
