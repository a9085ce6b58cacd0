#include <doctest.h>

#include <vector>

#include "leraytk/errors.hpp"
#include "leraytk/simplex.hpp"

using leraytk::Simplex;
using leraytk::VertexId;

TEST_CASE("simplices are stored sorted and reject repeats") {
  const Simplex s(std::vector<VertexId>{3, 1, 2});
  CHECK(s == Simplex{1, 2, 3});
  CHECK(s.dimension() == 2);
  CHECK(Simplex{}.dimension() == -1);
  CHECK_THROWS_AS(Simplex(std::vector<VertexId>{1, 1}), leraytk::InvalidArgument);
}

TEST_CASE("set operations") {
  const Simplex a{0, 1, 2}, b{1, 3};
  CHECK(a.united_with(b) == Simplex{0, 1, 2, 3});
  CHECK(a.intersected_with(b) == Simplex{1});
  CHECK(a.without(b) == Simplex{0, 2});
  CHECK(a.facet_without(1) == Simplex{0, 2});
  CHECK(Simplex{0, 2}.is_face_of(a));
  CHECK_FALSE(b.is_face_of(a));
  CHECK(Simplex{}.is_face_of(b));
  CHECK(Simplex{0, 2}.disjoint_from(b));
  CHECK(a.contains(2));
  CHECK(a.to_string() == "{0,1,2}");
}

TEST_CASE("ordering is lexicographic; SizeThenLex puts smaller simplices first") {
  CHECK(Simplex{0, 5} < Simplex{1});
  CHECK(leraytk::SizeThenLex{}(Simplex{1}, Simplex{0, 5}));
}

TEST_CASE("sorting sign is the permutation parity") {
  CHECK(leraytk::sorting_sign(std::vector<VertexId>{0, 1, 2}) == 1);
  CHECK(leraytk::sorting_sign(std::vector<VertexId>{1, 0, 2}) == -1);
  CHECK(leraytk::sorting_sign(std::vector<VertexId>{2, 0, 1}) == 1);
  CHECK(leraytk::sorting_sign(std::vector<VertexId>{3, 2, 1, 0}) == 1);
}
