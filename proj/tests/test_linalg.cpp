#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nlal/matrix.hpp"

using namespace nlal;

TEST_CASE("rational arithmetic is exact and reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("7/21").str() == "1/3");
  CHECK(Rational::parse("-12").str() == "-12");
  CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("3/-4"), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rank on small cases") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel_basis on small cases") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());

  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] == kb[0][1]);  // spans (1,1)^T up to scale
  CHECK(!kb[0][0].is_zero());

  Matrix p(2, 2);
  p.at(0, 0) = 1;
  p.at(0, 1) = 2;
  p.at(1, 0) = 2;
  p.at(1, 1) = 4;
  kb = kernel_basis(p);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] + Rational(2) * kb[0][1] == Rational(0));
}

TEST_CASE("solve on small cases") {
  Vec b{Rational(3), Rational(5)};
  auto x = solve(Matrix::identity(2), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto z = solve(Matrix(2, 2), Vec{Rational(0), Rational(0)});
  REQUIRE(z);
  CHECK(is_zero(*z));

  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  auto u = solve(m, Vec{Rational(2)});
  REQUIRE(u);
  CHECK((*u)[0] - (*u)[1] == Rational(2));  // verified by substitution

  CHECK_THROWS_AS(solve(m, Vec{Rational(1), Rational(2)}), std::invalid_argument);

  // inconsistent system
  Matrix c(2, 1);
  c.at(0, 0) = 1;
  c.at(1, 0) = 1;
  CHECK(!solve(c, Vec{Rational(0), Rational(1)}));
}

TEST_CASE("rank-nullity and exact residuals on pseudo-random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(d(rng), 1 + static_cast<int>(rng() % 3));
    int rk = rank(m);
    auto kb = kernel_basis(m);
    CHECK(rk + static_cast<int>(kb.size()) == cols);
    for (const auto& v : kb) CHECK(is_zero(m.apply(v)));  // zero residual, no tolerance
    Vec x(cols);
    for (auto& q : x) q = Rational(d(rng));
    Vec b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m.apply(*sol) == b);
  }
}
