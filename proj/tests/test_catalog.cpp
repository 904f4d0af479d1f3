#include "polynorm/catalog.hpp"
#include "polynorm/invariants.hpp"
#include "polynorm/semigroup.hpp"

#include <doctest.h>

using namespace polynorm;

TEST_CASE("cubes and simplices") {
  CHECK(cube(1).num_vertices() == 2);
  CHECK(cube(3).num_vertices() == 8);
  CHECK(cube(3).facets().size() == 6);
  CHECK(volume_ehrhart(cube(3)) == 6);
  CHECK_THROWS_AS(cube(0), std::invalid_argument);
  CHECK(standard_simplex(2).num_vertices() == 3);
  for (int d = 1; d <= 4; ++d) {
    CHECK(volume_ehrhart(standard_simplex(d)) == 1);
    CHECK(degree(standard_simplex(d)) == 0);
  }
}

TEST_CASE("Bruns-Gubeladze family") {
  CHECK_THROWS_AS(bruns_gubeladze(3), std::invalid_argument);
  const Polytope p = bruns_gubeladze(4);
  CHECK(p.num_vertices() == 8);
  CHECK(p.lattice_points(1).size() == 8);
  CHECK(volume_ehrhart(p) == 10);
  for (int s = 4; s <= 7; ++s) {
    const Polytope q = bruns_gubeladze(s);
    CHECK(very_ample_check(q, 2).very_ample);
    CHECK_FALSE(is_k_normal(q, 2).is_normal);
  }
}

TEST_CASE("Higashitani family") {
  CHECK_THROWS_AS(higashitani(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(higashitani(3, 0), std::invalid_argument);
  const Polytope p = higashitani(3, 2);
  CHECK(p.dim() == 3);
  CHECK(p.num_vertices() == 10);
  CHECK(p.lattice_points(1).size() == 11);
  CHECK(p.is_vertex(make_vector({1, 0, 4})));
  CHECK(p.is_vertex(make_vector({1, 0, 5})));
  CHECK(higashitani(4, 1).dim() == 4);
}

TEST_CASE("Reeve-like simplex") {
  const Polytope p = reeve_like();
  CHECK(volume_ehrhart(p) == 2);
  CHECK_FALSE(is_smooth(p));
  CHECK_FALSE(very_ample_check(p, compute_d_P(p)).very_ample);
}

TEST_CASE("random polytopes are seeded and full-dimensional") {
  const Polytope a = random_polytope(2, 3, 6, 42);
  const Polytope b = random_polytope(2, 3, 6, 42);
  CHECK(a.vertices() == b.vertices());
  CHECK(compute_d_P(a) == 1);
  const Polytope c = random_polytope(3, 2, 8, 7);
  CHECK(c.dim() == 3);
  CHECK(affine_rank(c.vertices()) == 3);
  CHECK(random_polytope(3, 2, 8, 8).vertices() != c.vertices());
  CHECK_THROWS_AS(random_polytope(3, 2, 3, 1), std::invalid_argument);
  // coordinates in [0, 0] can never span
  CHECK_THROWS_AS(random_polytope(2, 0, 5, 1), std::invalid_argument);
}

TEST_CASE("family spec grammar") {
  CHECK(from_family("cube:2").num_vertices() == 4);
  CHECK(from_family("simplex:3").num_vertices() == 4);
  CHECK(from_family("bruns:5").lattice_points(1).size() == 8);
  CHECK(from_family("higashitani:3,3").lattice_points(1).size() == 14);
  CHECK(from_family("reeve").num_vertices() == 4);
  CHECK(from_family("random:2,3,6,42").vertices() == random_polytope(2, 3, 6, 42).vertices());
  CHECK(is_family_spec("bruns:4"));
  CHECK(is_family_spec("reeve"));
  CHECK_FALSE(is_family_spec("data/p.json"));
  for (const char* bad : {"cube", "cube:x", "cube:2,3", "foo:1", "higashitani:3", "reeve:1", "random:2,3,6,-1",
                          "bruns:", "cube:1,"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(from_family(bad), std::invalid_argument);
  }
}
