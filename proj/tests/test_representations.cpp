#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace nlal;

TEST_CASE("representation validation") {
  CHECK(validate_representation(trivial_representation(fx::a4(), 3)).pass());
  CHECK(validate_representation(adjoint_representation(fx::a4())).pass());
  CHECK(validate_representation(adjoint_representation(fx::n2d3())).pass());

  Report r = validate_representation(fx::scaled_adjoint(fx::a4()));
  REQUIRE_FALSE(r.pass());
  CHECK_FALSE(r.find("R1")->pass);  // the failed condition is named

  // weak representation: (R1) holds, (R2) does not
  Representation w = fx::weak_not_full();
  CHECK(validate_representation(w, RepMode::weak).pass());
  Report rw = validate_representation(w, RepMode::full);
  REQUIRE_FALSE(rw.pass());
  CHECK(rw.find("R1")->pass);
  CHECK_FALSE(rw.find("R2")->pass);
  CHECK(rw.find("R2")->witnesses.front().args[1].second == std::vector<int>{2, 3, 4});
}

TEST_CASE("semidirect product") {
  // trivial rho: direct sum with V an abelian ideal
  Representation triv = trivial_representation(fx::a4(), 2);
  NLieAlgebra s = semidirect_product(triv);
  CHECK(s.dim == 6);
  CHECK(validate_n_lie(s).pass());
  for (const auto& t : wedge_basis(6, 3)) {
    Vec v = s.bracket_idx(t);
    bool pure_g = t[0] < 4 && t[1] < 4 && t[2] < 4;
    if (!pure_g)
      CHECK(is_zero(v));
  }

  // adjoint of the n=2 dim-3 algebra: a 6-dimensional Lie algebra
  NLieAlgebra s2 = semidirect_product(adjoint_representation(fx::n2d3()));
  CHECK(s2.dim == 6);
  CHECK(validate_n_lie(s2).pass());

  // the g-component of the semidirect bracket is the original bracket
  NLieAlgebra a = fx::a4();
  NLieAlgebra s3 = semidirect_product(adjoint_representation(a));
  for (const auto& t : wedge_basis(4, 3)) {
    Vec big = s3.bracket_idx(t);
    Vec small = a.bracket_idx(t);
    for (int k = 0; k < 4; ++k) CHECK(big[k] == small[k]);
  }

  CHECK_THROWS_AS(semidirect_product(fx::scaled_adjoint(fx::a4())), ValidationError);
}

TEST_CASE("hemisemidirect product") {
  NLieAlgebra a = fx::a4();
  LeibnizNAlgebra h = hemisemidirect_product(adjoint_representation(a));
  CHECK(validate_leibniz_n(h).pass());

  // skewness certificate: swapping slots 1 and n changes the value somewhere
  bool witness = false;
  IndexTuple t(3, 0);
  do {
    IndexTuple sw = t;
    std::swap(sw[0], sw[2]);
    Vec v1 = h.bracket_idx(t);
    Vec v2 = h.bracket_idx(sw);
    axpy(v2, Rational(1), v1);  // v1 + v2 != 0 somewhere if not skew
    if (!is_zero(v2)) witness = true;
  } while (next_index(t, 8));
  CHECK(witness);

  // the bracket vanishes whenever any of the first n-1 arguments lies in V
  IndexTuple u(3, 0);
  do {
    if (u[0] >= 4 || u[1] >= 4) CHECK(is_zero(h.bracket_idx(u)));
  } while (next_index(u, 8));

  // trivial rho reduces to the g-bracket extended by zero
  LeibnizNAlgebra h0 = hemisemidirect_product(trivial_representation(a, 2));
  IndexTuple q(3, 0);
  do {
    Vec v = h0.bracket_idx(q);
    bool pure_g = q[0] < 4 && q[1] < 4 && q[2] < 4;
    if (pure_g) {
      Vec b = a.bracket_idx(q);
      for (int k = 0; k < 4; ++k) CHECK(v[k] == b[k]);
    } else {
      CHECK(is_zero(v));
    }
  } while (next_index(q, 6));
}

TEST_CASE("hom module") {
  // trivial rho over an abelian algebra: both actions vanish
  LeibnizModule M0 = hom_module(trivial_representation(fx::abelian(3, 3), 2));
  for (const auto& m : M0.left) CHECK(m.is_zero());
  for (const auto& m : M0.right) CHECK(m.is_zero());

  // adjoint of n2d3: all axioms hold exactly, including (MMM)
  NLieAlgebra g = fx::n2d3();
  LeibnizAlgebra L = fundamental_leibniz(g);
  Report r = validate_leibniz_module(L, hom_module(adjoint_representation(g)));
  CHECK(r.pass());
  CHECK(r.find("MMM")->pass);

  // converse of the equivalence: (R2) fails  =>  (MMM) fails
  Representation w = fx::weak_not_full();
  LeibnizAlgebra Lw = fundamental_leibniz(w.algebra);
  Report rw = validate_leibniz_module(Lw, hom_module(w));
  CHECK(rw.find("LLM")->pass);  // weak part holds
  CHECK_FALSE(rw.find("MMM")->pass);

  // zeroing the right action leaves a degenerate but valid bimodule
  LeibnizModule h = hom_module(adjoint_representation(g));
  for (auto& m : h.right) m = Matrix(h.mdim, h.mdim);
  CHECK(validate_leibniz_module(L, h).pass());

  // replacing the right action by the left one breaks (LML)/(MMM), with witness
  LeibnizModule h2 = hom_module(adjoint_representation(g));
  h2.right = h2.left;
  Report rl = validate_leibniz_module(L, h2);
  CHECK_FALSE(rl.find("LML")->pass);
  CHECK_FALSE(rl.find("MMM")->pass);
  CHECK_FALSE(rl.find("MMM")->witnesses.empty());
}

TEST_CASE("equivalence of (R1)+(R2) with the Leibniz module axioms") {
  // three valid and three invalid representations; the biconditional holds
  std::vector<Representation> corpus;
  corpus.push_back(trivial_representation(fx::a4(), 2));
  corpus.push_back(adjoint_representation(fx::a4()));
  corpus.push_back(adjoint_representation(fx::n2d3()));
  corpus.push_back(fx::scaled_adjoint(fx::a4()));
  corpus.push_back(fx::weak_not_full());
  corpus.push_back(fx::random_rep(fx::a4(), 2, 99));
  int valid = 0;
  for (const auto& r : corpus) {
    bool rep_ok = validate_representation(r, RepMode::full).pass();
    LeibnizAlgebra L = fundamental_leibniz(r.algebra);
    bool mod_ok = validate_leibniz_module(L, hom_module(r)).pass();
    CHECK(rep_ok == mod_ok);
    valid += rep_ok ? 1 : 0;
  }
  CHECK(valid == 3);
}
