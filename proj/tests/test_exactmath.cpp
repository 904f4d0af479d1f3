#include "oracles.hpp"
#include "polynorm/exactmath.hpp"

#include <doctest.h>

#include <random>

using namespace polynorm;

TEST_CASE("floor and ceiling division round toward the right infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(-6, -3) == 2);
  CHECK_THROWS_AS(floor_div(1, 0), MathError);
}

TEST_CASE("factorial and narrowing") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK(to_long(Integer(-42)) == -42);
  CHECK_THROWS_AS(to_long(factorial(30)), std::overflow_error);
}

TEST_CASE("content and primitive direction") {
  CHECK(content(make_vector({4, -6, 10})) == 2);
  CHECK(content(make_vector({0, 0})) == 0);
  CHECK(primitive(make_vector({4, -6, 10})) == make_vector({2, -3, 5}));
  CHECK(primitive(make_vector({0, -3})) == make_vector({0, -1}));
  CHECK_THROWS_AS(primitive(make_vector({0, 0, 0})), MathError);
}

TEST_CASE("lexicographic order") {
  CHECK(lex_less(make_vector({0, 5}), make_vector({1, 0})));
  CHECK(lex_less(make_vector({1, 0}), make_vector({1, 1})));
  CHECK_FALSE(lex_less(make_vector({1, 1}), make_vector({1, 1})));
  CHECK(to_string(make_vector({1, -2, 3})) == "(1,-2,3)");
}

TEST_CASE("Bareiss determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 5);
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = size(rng);
    oracle::Grid g(n, oracle::Row(n));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // sparse rows make singular and pivot-swapping cases common
        g[i][j] = trial % 3 == 0 && entry(rng) > 3 ? 0 : entry(rng);
        m(i, j) = g[i][j];
      }
    }
    REQUIRE(det_exact(m) == oracle::det_cofactor(g));
  }
}

TEST_CASE("determinant edge cases") {
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK(det_exact(make_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(make_matrix({{1, 2}, {2, 4}})) == 0);
  CHECK(det_exact(make_matrix({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})) == -2);
  CHECK_THROWS_AS(det_exact(make_matrix({{1, 2, 3}, {4, 5, 6}})), MathError);
  // entries beyond 64 bits stay exact
  IntMatrix big(2, 2);
  big << factorial(25), factorial(24), factorial(23), factorial(22);
  CHECK(det_exact(big) == factorial(25) * factorial(22) - factorial(24) * factorial(23));
}

TEST_CASE("rank matches the largest nonzero minor") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    oracle::Grid g(rows, oracle::Row(cols));
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        g[i][j] = entry(rng) * (trial % 2 ? 1 : entry(rng));
        m(i, j) = g[i][j];
      }
    }
    REQUIRE(static_cast<std::size_t>(rank(m)) == oracle::rank_by_minors(g));
  }
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({}) == -1);
  CHECK(affine_rank({make_vector({3, 3})}) == 0);
  CHECK(affine_rank({make_vector({0, 0}), make_vector({1, 1}), make_vector({2, 2})}) == 1);
  CHECK(affine_rank({make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                     make_vector({0, 0, 1})}) == 3);
}

TEST_CASE("cofactor normal is orthogonal to every row") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix rows(n - 1, n);
      for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n; ++j) rows(i, j) = entry(rng);
      }
      const IntVector normal = cofactor_normal(rows);
      for (int i = 0; i < n - 1; ++i) CHECK(rows.row(i).dot(normal.transpose()) == 0);
      CHECK((content(normal) == 0) == (rank(rows) < n - 1));
    }
  }
}

TEST_CASE("exact rational solve") {
  const IntMatrix a = make_matrix({{2, 1}, {1, 3}});
  const SolveResult s = solve_rational(a, make_vector({1, 2}));
  REQUIRE(s);
  CHECK(s.solution(0) == Rational(1, 5));
  CHECK(s.solution(1) == Rational(3, 5));
  CHECK(solve_rational(make_matrix({{1, 2}, {2, 4}}), make_vector({1, 2})).status == SolveStatus::underdetermined);
  CHECK(solve_rational(make_matrix({{1, 2}, {2, 4}}), make_vector({1, 3})).status == SolveStatus::no_solution);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(4, 4);
    IntVector b(4);
    for (int i = 0; i < 4; ++i) {
      b(i) = entry(rng);
      for (int j = 0; j < 4; ++j) m(i, j) = entry(rng);
    }
    const SolveResult r = solve_rational(m, b);
    CHECK(static_cast<bool>(r) == (det_exact(m) != 0));
    if (r) {
      RationalVector back(4);
      for (int i = 0; i < 4; ++i) {
        back(i) = 0;
        for (int j = 0; j < 4; ++j) back(i) += Rational(m(i, j)) * r.solution(j);
      }
      CHECK(back == to_rational(b));
    }
  }
}
