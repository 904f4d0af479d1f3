#include "oracles.hpp"
#include "polynorm/catalog.hpp"
#include "polynorm/invariants.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

using namespace polynorm;

namespace {

std::vector<IntVector> pts(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

std::vector<oracle::Row> sorted_rows(std::vector<oracle::Row> rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<IntVector> random_points(std::mt19937_64& rng, int d, int count, int bound) {
  std::uniform_int_distribution<int> coord(0, bound);
  while (true) {
    std::vector<IntVector> out;
    for (int i = 0; i < count; ++i) {
      IntVector x(d);
      for (int j = 0; j < d; ++j) x(j) = coord(rng);
      out.push_back(x);
    }
    if (affine_rank(out) == d) return out;
  }
}

}  // namespace

TEST_CASE("unit cube hull") {
  const Polytope c = cube(3);
  CHECK(c.dim() == 3);
  CHECK(c.num_vertices() == 8);
  CHECK(c.facets().size() == 6);
  CHECK(validate(c).empty());
  CHECK(c.contains(make_vector({1, 1, 1})));
  CHECK_FALSE(c.contains(make_vector({2, 0, 0})));
  CHECK(c.contains(make_vector({2, 0, 0}), 2));
  CHECK_FALSE(c.contains_interior(make_vector({1, 1, 1})));
  CHECK(c.contains_interior(make_vector({1, 1, 1}), 2));
  CHECK(c.active_facets(make_vector({0, 0, 0})).size() == 3);
  CHECK(c.is_vertex(make_vector({1, 0, 1})));
  CHECK_THROWS_AS(c.vertex_index(make_vector({2, 0, 0})), GeometryError);
  for (const auto& f : c.facet_vertices()) CHECK(f.size() == 4);
}

TEST_CASE("redundant and repeated points are dropped") {
  const Polytope p = Polytope::from_points(pts({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {1, 1}, {0, 0}, {2, 2}}));
  CHECK(p.num_vertices() == 4);
  CHECK_FALSE(p.is_vertex(make_vector({1, 0})));
  CHECK(p.lattice_points(1).size() == 9);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(Polytope::from_points(std::vector<IntVector>{}), GeometryError);
  CHECK_THROWS_AS(Polytope::from_points(pts({{0, 0}, {1}})), GeometryError);
  try {
    Polytope::from_points(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
    FAIL("coplanar points accepted");
  } catch (const NotFullDimensional& e) {
    CHECK(e.affine_rank() == 2);
  }
}

TEST_CASE("vertices agree with the Caratheodory extremality oracle") {
  std::mt19937_64 rng(11);
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto points = random_points(rng, d, d + 5, 4);
      const Polytope p = Polytope::from_points(points);
      CHECK(validate(p).empty());
      const auto expected = sorted_rows(oracle::extreme_points(oracle::to_rows(points)));
      CHECK(sorted_rows(oracle::to_rows(p.vertices())) == expected);
    }
  }
}

TEST_CASE("lattice points of dilates agree with a hull-membership box scan") {
  std::mt19937_64 rng(12);
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 12; ++trial) {
      const Polytope p = Polytope::from_points(random_points(rng, d, d + 3, 3));
      for (int k = 1; k <= (d == 2 ? 3 : 2); ++k) {
        const auto expected = sorted_rows(oracle::box_lattice_points(oracle::to_rows(p.vertices()), k));
        CHECK(oracle::to_rows(p.lattice_points(k)) == expected);
      }
    }
  }
}

TEST_CASE("lattice points are sorted and memoized") {
  const Polytope b = bruns_gubeladze(4);
  const auto& l = b.lattice_points(2);
  CHECK(std::is_sorted(l.begin(), l.end(), LexLess{}));
  CHECK_THROWS_AS(b.lattice_points(0), std::invalid_argument);
  CHECK(lattice_points(b, 1).size() == 8);
  CHECK(&b.lattice_points(2) == &b.lattice_points(2));
}

TEST_CASE("interior lattice points") {
  CHECK(interior_lattice_points(cube(3), 1).empty());
  const auto inner = interior_lattice_points(cube(3), 2);
  REQUIRE(inner.size() == 1);
  CHECK(inner.front() == make_vector({1, 1, 1}));
  CHECK(interior_lattice_points(cube(2), 3).size() == 4);
}

TEST_CASE("Pick's theorem on random polygons") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Polytope p = Polytope::from_points(random_points(rng, 2, 7, 6));
    const long long interior = static_cast<long long>(interior_lattice_points(p, 1).size());
    const long long boundary = static_cast<long long>(p.lattice_points(1).size()) - interior;
    CHECK(volume_ehrhart(p) == 2 * interior + boundary - 2);
  }
}

TEST_CASE("shoelace area matches the triangulation volume of polygons") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope p = Polytope::from_points(random_points(rng, 2, 6, 7));
    // order the vertices by angle around an interior point
    auto rows = oracle::to_rows(p.vertices());
    double cx = 0, cy = 0;
    for (const auto& r : rows) {
      cx += static_cast<double>(r[0]) / rows.size();
      cy += static_cast<double>(r[1]) / rows.size();
    }
    std::sort(rows.begin(), rows.end(), [&](const oracle::Row& a, const oracle::Row& b) {
      return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    CHECK(volume_triangulation(p) == oracle::twice_area(rows));
  }
}

TEST_CASE("lattice point cache is safe under concurrent readers") {
  const Polytope p = bruns_gubeladze(6);
  const Polytope copy = p;
  std::vector<std::size_t> counts(8);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      const Polytope& mine = t % 2 ? p : copy;
      std::size_t total = 0;
      for (int k = 1; k <= 5; ++k) total += mine.lattice_points(k).size();
      counts[t] = total;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == counts.front(); }));
  CHECK(&p.lattice_points(3) == &copy.lattice_points(3));
}

TEST_CASE("edges of the cube and the Reeve simplex") {
  const Polytope c = cube(3);
  for (const auto& v : c.vertices()) {
    const EdgeFan fan = edge_fan(c, v);
    CHECK(fan.edge_directions.size() == 3);
    CHECK(fan.neighbor_vertices.size() == 3);
  }
  const Polytope r = reeve_like();
  const EdgeFan fan = edge_fan(r, make_vector({0, 0, 0}));
  CHECK(fan.edge_directions.size() == 3);
  IntMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.col(i) = fan.edge_directions[i];
  CHECK(abs(det_exact(m)) == 2);
}

TEST_CASE("dilate and translate") {
  const Polytope b = bruns_gubeladze(4);
  const Polytope two = dilate(b, 2);
  CHECK(two.lattice_points(1) == b.lattice_points(2));
  CHECK_THROWS_AS(dilate(b, 0), std::invalid_argument);
  const Polytope moved = translate(b, make_vector({1, -2, 3}));
  CHECK(moved.lattice_points(1).size() == 8);
  for (const auto& x : b.lattice_points(1)) CHECK(moved.contains(x + make_vector({1, -2, 3})));
  CHECK_FALSE(moved.contains(make_vector({2, -1, 6})));
}

TEST_CASE("product lattice points are the Cartesian product") {
  const std::vector<std::pair<Polytope, Polytope>> pairs{
      {standard_simplex(1), cube(2)}, {standard_simplex(2), standard_simplex(2)}, {cube(1), reeve_like()}};
  for (const auto& [a, b] : pairs) {
    const Polytope prod = product(a, b);
    CHECK(prod.dim() == a.dim() + b.dim());
    CHECK(prod.num_vertices() == a.num_vertices() * b.num_vertices());
    for (int k = 1; k <= 3; ++k) {
      std::set<oracle::Row> expected;
      for (const auto& x : a.lattice_points(k)) {
        for (const auto& y : b.lattice_points(k)) {
          oracle::Row row = oracle::to_row(x);
          for (const auto c : oracle::to_row(y)) row.push_back(c);
          expected.insert(row);
        }
      }
      const auto got = oracle::to_rows(prod.lattice_points(k));
      CHECK(std::set<oracle::Row>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("join of two polytopes") {
  const Polytope j = join(standard_simplex(1), standard_simplex(1));
  CHECK(j.dim() == 3);
  CHECK(j.num_vertices() == 4);
  CHECK(volume_ehrhart(j) == 1);
  const Polytope k = join(cube(2), standard_simplex(1));
  CHECK(k.dim() == 4);
  CHECK(k.num_vertices() == 6);
}

TEST_CASE("union of polytopes") {
  const Polytope left = cube(2);
  const Polytope right = translate(cube(2), make_vector({1, 0}));
  const auto merged = union_if_convex(std::vector<Polytope>{left, right});
  REQUIRE(merged);
  CHECK(merged->num_vertices() == 4);
  CHECK(merged->contains(make_vector({2, 1})));

  const Polytope corner = translate(cube(2), make_vector({1, 1}));
  CHECK_FALSE(union_if_convex(std::vector<Polytope>{left, corner}));

  const Polytope far = translate(cube(2), make_vector({5, 0}));
  CHECK_FALSE(union_if_convex(std::vector<Polytope>{left, far}));

  // two triangles forming a square
  const Polytope lower = Polytope::from_points(pts({{0, 0}, {1, 0}, {1, 1}}));
  const Polytope upper = Polytope::from_points(pts({{0, 0}, {0, 1}, {1, 1}}));
  const auto square = union_if_convex(std::vector<Polytope>{lower, upper});
  REQUIRE(square);
  CHECK(volume_ehrhart(*square) == 2);
  CHECK(union_if_convex(std::vector<Polytope>{left})->num_vertices() == 4);
}

TEST_CASE("pulling triangulation covers the polytope") {
  for (const Polytope& p : {cube(3), bruns_gubeladze(5), higashitani(3, 2), reeve_like(), cube(4)}) {
    const auto simplices = triangulate(p);
    Integer total = 0;
    for (const auto& s : simplices) {
      CHECK(s.size() == static_cast<std::size_t>(p.dim()) + 1);
      std::vector<IntVector> corners;
      for (auto i : s) corners.push_back(p.vertices()[i]);
      const Integer vol = simplex_volume(corners);
      CHECK(vol > 0);
      total += vol;
    }
    CHECK(total == volume_ehrhart(p));
  }
  CHECK(triangulate(cube(3)).size() == 6);
}

TEST_CASE("half-space helpers") {
  const HalfSpace h{make_vector({1, 1}), 2};
  CHECK(h.contains(make_vector({1, 1})));
  CHECK(h.is_tight(make_vector({2, 0})));
  CHECK_FALSE(h.contains(make_vector({3, 0})));
  CHECK(h.contains(make_vector({3, 0}), 2));
  CHECK(hrep_from_vrep(cube(2).vertices()).size() == 4);
}

TEST_CASE("enumeration with explicit right-hand sides") {
  const Polytope c = cube(2);
  std::vector<Integer> rhs;
  for (const auto& f : c.facets()) rhs.push_back(f.offset * 3);
  const auto points = enumerate_lattice_points(c.facets(), rhs, make_vector({0, 0}), make_vector({3, 3}));
  CHECK(points.size() == 16);
}
