#include <doctest.h>

#include <set>

#include "leraytk/homology.hpp"
#include "leraytk/random.hpp"

using namespace leraytk;

TEST_CASE("counter rng is a pure function of seed, stream and counter") {
  CounterRng a(42, 3);
  CounterRng b(42, 3);
  CounterRng c(42, 4);
  std::set<std::uint64_t> seen;
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
    seen.insert(x);
  }
  CHECK(differs);
  CHECK(seen.size() == 100);
  CHECK(a.counter() == 100);
  CounterRng d(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(d.below(7) < 7);
    const double u = d.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("density extremes") {
  const RandomComplexSpec none{3, {2, 2, 2}, 2, 0.0};
  const auto x0 = random_partitioned_complex(none, 5);
  CHECK(x0.complex().dimension() == 0);
  CHECK(x0.complex().facets().size() == 6);

  const RandomComplexSpec all{3, {2, 2, 2}, 2, 1.0};
  const auto x1 = random_partitioned_complex(all, 5);
  CHECK(x1.complex().dimension() == 2);
  CHECK(x1.complex().facets().size() == 8);
  CHECK(x1.part_count() == 3);
}

TEST_CASE("generation is deterministic") {
  const RandomComplexSpec spec{3, {2, 2, 2}, 2, 0.5};
  const auto a = random_partitioned_complex(spec, 1);
  const auto b = random_partitioned_complex(spec, 1);
  CHECK(a == b);
  bool any_differs = false;
  for (std::uint64_t s = 2; s < 10; ++s) any_differs |= !(random_partitioned_complex(spec, s) == a);
  CHECK(any_differs);
  CHECK(random_instance({4, 3, 2, 12}, 9) == random_instance({4, 3, 2, 12}, 9));
  CHECK(random_complex(8, 3, 0.4, 3) == random_complex(8, 3, 0.4, 3));
}

TEST_CASE("instance bounds are respected") {
  const InstanceBounds bounds{4, 3, 2, 9};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto px = random_instance(bounds, seed);
    CHECK(px.part_count() <= 4);
    CHECK(px.complex().vertex_count() <= 9);
    CHECK(px.complex().dimension() <= 2);
    for (const auto& p : px.parts()) CHECK(p.size() <= 3);
    const auto family = random_instance_family(bounds, seed, 3);
    REQUIRE(family.size() == 3);
    CHECK(family[0].parts() == family[2].parts());
  }
}

TEST_CASE("random graphs") {
  const auto g = random_graph(9, 1.0, 3);
  CHECK(g.edges().size() == 36);
  CHECK(random_graph(9, 0.0, 3).edges().empty());
  CHECK(random_graph(7, 0.5, 12).edges() == random_graph(7, 0.5, 12).edges());
}
