#include <doctest.h>

#include <random>

#include "asorbit/matrix.hpp"
#include "test_helpers.hpp"

using namespace asorbit;
using namespace asorbit_test;

TEST_CASE("rank basics") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(example6()) == 4);
  CHECK(rank_by_minors(example6()) == 4);
  CHECK(rank(make_matrix({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank agrees with the minor oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    const Matrix m = random_matrix(rng, rows, cols, 3);
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("upper-left blocks") {
  const Matrix m = make_matrix({{2, 3, 4}, {3, 4, 5}, {4, 5, 6}});  // e_ij = i + j
  CHECK(m.upper_left(2, 2) == make_matrix({{2, 3}, {3, 4}}));
  CHECK(m.upper_left(3, 3) == m);
  CHECK(example6().upper_left(1, 4) == make_matrix({{0, 0, 0, 1}}));
  CHECK_THROWS_AS(m.upper_left(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.upper_left(2, 4), std::out_of_range);
}

TEST_CASE("submatrix ranks are monotone with unit steps") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Matrix m = random_matrix(rng, n, n, 4);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        const int r = rank(m.upper_left(k, l));
        CHECK(r <= std::min(k, l));
        if (k > 1) {
          const int up = rank(m.upper_left(k - 1, l));
          CHECK(r >= up);
          CHECK(r <= up + 1);
        }
        if (l > 1) {
          const int left = rank(m.upper_left(k, l - 1));
          CHECK(r >= left);
          CHECK(r <= left + 1);
        }
      }
  }
}

TEST_CASE("determinant") {
  CHECK(det(Matrix::identity(5)) == Rational(1));
  CHECK(det(make_matrix({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK_THROWS_AS(det(Matrix(2, 3)), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Matrix m = random_matrix(rng, n, n, 4);
    CHECK(det(m) == det_by_cofactors(m));
  }
}

TEST_CASE("anti-symmetric validation") {
  CHECK_NOTHROW(ASMatrix(Matrix(3, 3)));
  CHECK_THROWS_AS(ASMatrix(make_matrix({{0, 1}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(ASMatrix(make_matrix({{1, 1}, {-1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(ASMatrix(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("pfaffian base cases") {
  CHECK(pfaffian(ASMatrix(make_matrix({{0, 5}, {-5, 0}}))) == Rational(5));
  CHECK(pfaffian(ASMatrix(Matrix(4, 4))) == Rational(0));
  CHECK(pfaffian(ASMatrix(Matrix(3, 3))) == Rational(0));  // odd size
  // monomial matrix of the pairing (1,2)(3,4)
  const Matrix m = make_matrix({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  CHECK(pfaffian(ASMatrix(m)).abs() == Rational(1));
  CHECK(pfaffian_by_expansion(m).abs() == Rational(1));
}

TEST_CASE("odd anti-symmetric matrices are singular") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = random_antisymmetric(rng, 5, 6);
    CHECK(det(m) == Rational(0));
  }
}

TEST_CASE("pfaffian squared equals the determinant") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 * (1 + static_cast<int>(rng() % 3));
    const Matrix m = random_antisymmetric(rng, n, 5);
    const Rational pf = pfaffian(ASMatrix(m));
    CHECK(pf * pf == det(m));
    CHECK(pf == pfaffian_by_expansion(m));
  }
}

TEST_CASE("rational entries work throughout") {
  Matrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(1);
  m(1, 1) = Rational(2);
  CHECK(rank(m) == 1);
  CHECK(det(m) == Rational(0));

  Matrix skew(2, 2);
  skew(0, 1) = Rational(2, 3);
  skew(1, 0) = Rational(-2, 3);
  CHECK(pfaffian(ASMatrix(skew)) == Rational(2, 3));

  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    Matrix q(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        q(i, j) = Rational(draw(rng, -7, 7), draw(rng, 1, 7));
        q(j, i) = -q(i, j);
      }
    const Rational pf = pfaffian(ASMatrix(q));
    CHECK(pf * pf == det(q));
    CHECK(pf == pfaffian_by_expansion(q));
  }
}

TEST_CASE("matrix product and transpose") {
  const Matrix a = make_matrix({{2, 1}, {0, 3}});
  const Matrix m = make_matrix({{0, 1}, {-1, 0}});
  CHECK(a.transpose() * m * a == make_matrix({{0, 6}, {-6, 0}}));
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
}
