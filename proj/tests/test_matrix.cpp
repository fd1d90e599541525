#include <doctest.h>

#include <random>

#include "metriclie/matrix.hpp"

using namespace metriclie;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  Matrix m = Matrix::from_nested({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  Matrix e = rref(m, &r, &piv);
  CHECK(r == 2);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(e(0, 0) == Rational(1));
  CHECK(e(1, 1) == Rational(1));
}

TEST_CASE("kernel basis spans the null space") {
  Matrix m = Matrix::from_nested({{1, 2, 3}, {2, 4, 6}});
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero_vec(mat_vec(m, v)));
}

TEST_CASE("solve_linear finds particular solutions and detects inconsistency") {
  Matrix m = Matrix::from_nested({{1, 1}, {1, -1}});
  auto x = solve_linear(m, Vec{Rational(3), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  Matrix s = Matrix::from_nested({{1, 1}, {2, 2}});
  CHECK_FALSE(solve_linear(s, Vec{Rational(1), Rational(3)}).has_value());
  CHECK(solve_linear(s, Vec{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("inverse and LU solve agree on random invertible matrices") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 30) {
    Matrix m = random_matrix(rng, 4, 4);
    if (determinant(m).is_zero()) continue;
    ++done;
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == Matrix::identity(4));
    LuSolver lu(m);
    REQUIRE_FALSE(lu.singular());
    Vec b{Rational(1), Rational(-2), Rational(3, 2), Rational(0)};
    Vec x = lu.solve(b);
    CHECK(mat_vec(m, x) == b);
  }
}

TEST_CASE("determinant matches cofactor expansion on 3x3") {
  Matrix m = Matrix::from_nested({{2, 0, 1}, {1, 1, 0}, {0, 3, -1}});
  // 2*(1*(-1) - 0*3) - 0 + 1*(1*3 - 1*0) = -2 + 3 = 1
  CHECK(determinant(m) == Rational(1));
  CHECK(determinant(Matrix::from_nested({{1, 2}, {2, 4}})) == Rational(0));
}

TEST_CASE("subspace canonical form and membership") {
  Vec a{Rational(1), Rational(1), Rational(0)};
  Vec b{Rational(0), Rational(0), Rational(1)};
  Vec c{Rational(1), Rational(1), Rational(1)};
  auto canon1 = subspace_canonical({a, b}, 3);
  auto canon2 = subspace_canonical({c, b}, 3);
  CHECK(canon1 == canon2);
  CHECK(subspace_contains(canon1, c, 3));
  CHECK_FALSE(subspace_contains(canon1, Vec{Rational(1), Rational(0), Rational(0)}, 3));
  CHECK(subspace_equal({a, b}, {c, a}, 3));
}

TEST_CASE("coordinates_in_span") {
  Vec a{Rational(1), Rational(0)};
  Vec b{Rational(1), Rational(1)};
  auto coords = coordinates_in_span({a, b}, Vec{Rational(3), Rational(2)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Rational(1));
  CHECK((*coords)[1] == Rational(2));
  CHECK_FALSE(coordinates_in_span({a}, Vec{Rational(0), Rational(1)}).has_value());
}
