#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "nlal/leibniz.hpp"

using namespace nlal;

TEST_CASE("fundamental identity validators") {
  CHECK(validate_n_lie(fx::abelian(2, 3)).pass());
  CHECK(validate_n_lie(fx::abelian(3, 5)).pass());
  CHECK(validate_n_lie(fx::n2d3()).pass());   // Jacobi, by direct expansion
  CHECK(validate_n_lie(fx::a4()).pass());
  CHECK_FALSE(validate_n_lie(fx::bad_a4()).pass());
}

TEST_CASE("invalid Leibniz fixture fails with a named tuple") {
  Report r = validate_leibniz_n(fx::bad_leibniz22());
  REQUIRE_FALSE(r.pass());
  const auto& w = r.checks[0].witnesses.front();
  // first violating instance in enumeration order: x=(1), y=(2,1)
  CHECK(w.args[0].second == std::vector<int>{1});
  CHECK(w.args[1].second == std::vector<int>{2, 1});
}

TEST_CASE("skew validator agrees with the Leibniz validator on the same constants") {
  for (const NLieAlgebra& a : {fx::a4(), fx::n2d3(), fx::bad_a4()}) {
    CHECK(validate_n_lie(a).pass() == validate_leibniz_n(fx::as_leibniz(a)).pass());
  }
}

TEST_CASE("ad matrices") {
  CHECK(ad_matrix(fx::abelian(2, 3), IndexTuple{0}).is_zero());
  Matrix m = ad_matrix(fx::n2d3(), IndexTuple{0});  // X = e1
  CHECK(m.at(2, 1) == Rational(1));                 // e2 -> e3
  CHECK(m.at(1, 2) == Rational(-1));                // e3 -> -e2
  CHECK(is_zero(m.col(0)));                         // e1 -> 0
  // decomposable with a repeated factor
  CHECK(ad_matrix(fx::a4(), IndexTuple{2, 2}).is_zero());
}

TEST_CASE("fundamental Leibniz algebra of a4") {
  NLieAlgebra a = fx::a4();
  LeibnizAlgebra L = fundamental_leibniz(a);
  WedgeTable lt(4, 2);
  // (e1,e2) o (e3,e4) = ([e1,e2,e3],e4) + (e3,[e1,e2,e4]) = (e4,e4) - (e3,e3) = 0
  CHECK(is_zero(L.circ_idx(static_cast<int>(lt.rank({0, 1})), static_cast<int>(lt.rank({2, 3})))));
  CHECK(is_zero(L.circ_idx(static_cast<int>(lt.rank({0, 1})), static_cast<int>(lt.rank({0, 1})))));
  CHECK(validate_leibniz(L).pass());
  // hand expansion oracle: (e1,e2) o (e1,e3) = ([e1,e2,e1],e3) + (e1,[e1,e2,e3]) = (e1,e4)
  const Vec& v = L.circ_idx(static_cast<int>(lt.rank({0, 1})), static_cast<int>(lt.rank({0, 2})));
  for (long k = 0; k < lt.count(); ++k)
    CHECK(v[k] == (k == lt.rank({0, 3}) ? Rational(1) : Rational(0)));
}

TEST_CASE("fundamental Leibniz algebra: abelian gives zero, invalid input rejected") {
  LeibnizAlgebra L = fundamental_leibniz(fx::abelian(3, 4));
  for (const auto& v : L.circ) CHECK(is_zero(v));
  CHECK_THROWS_AS(fundamental_leibniz(fx::bad_a4()), ValidationError);
}

TEST_CASE("ad is a homomorphism of Leibniz algebras") {
  for (const NLieAlgebra& a : {fx::n2d3(), fx::a4()}) {
    LeibnizAlgebra L = fundamental_leibniz(a);
    WedgeTable lt(a.dim, a.n - 1);
    for (long i = 0; i < lt.count(); ++i)
      for (long j = 0; j < lt.count(); ++j) {
        Matrix lhs = ad_matrix(a, lt.basis[i]) * ad_matrix(a, lt.basis[j]) -
                     ad_matrix(a, lt.basis[j]) * ad_matrix(a, lt.basis[i]);
        Matrix rhs = ad_matrix(a, L.circ_idx(static_cast<int>(i), static_cast<int>(j)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("n-Lie homomorphism checks") {
  NLieAlgebra a = fx::a4();
  CHECK(is_nlie_homomorphism(Matrix::identity(4), a, a).pass());
  CHECK(is_nlie_homomorphism(Matrix(4, 4), a, a).pass());  // zero map
  Matrix s = Matrix::identity(4);
  s.at(3, 3) = Rational(2);  // e4 -> 2 e4
  Report r = is_nlie_homomorphism(s, a, a);
  REQUIRE_FALSE(r.pass());
  CHECK(r.checks[0].witnesses.front().args[0].second == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(is_nlie_homomorphism(Matrix(3, 4), a, fx::n2d3()), ShapeError);
}

TEST_CASE("leibniz module axioms: zero actions pass") {
  LeibnizAlgebra L = fundamental_leibniz(fx::n2d3());
  LeibnizModule M(L.dim, 2);
  CHECK(validate_leibniz_module(L, M).pass());
}
