#ifndef NLAL_TESTS_FIXTURES_HPP
#define NLAL_TESTS_FIXTURES_HPP

#include <random>

#include "nlal/deformations.hpp"
#include "nlal/lm_cohomology.hpp"

namespace fx {

using namespace nlal;

/// The 4-dimensional 3-Lie algebra with [e_i,e_j,e_k] = eps_{ijkl} e_l.
inline NLieAlgebra a4() {
  NLieAlgebra a(3, 4, "a4");
  for (const auto& t : wedge_basis(4, 3)) {
    int l = 6 - t[0] - t[1] - t[2];
    IndexTuple full = t;
    full.push_back(l);
    auto [s, sorted] = normalize_wedge(full);
    a.bracket.add(t, l, Rational(s));
  }
  return a;
}

/// n = 2, dim 3: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
inline NLieAlgebra n2d3() {
  NLieAlgebra a(2, 3, "so3q");
  a.bracket.add({0, 1}, 2, Rational(1));
  a.bracket.add({1, 2}, 0, Rational(1));
  a.bracket.add({2, 0}, 1, Rational(1));
  return a;
}

inline NLieAlgebra abelian(int n, int dim) {
  return NLieAlgebra(n, dim, "abelian" + std::to_string(n) + "d" + std::to_string(dim));
}

/// A skew bracket on 4 dims violating the fundamental identity.
inline NLieAlgebra bad_a4() {
  NLieAlgebra a = a4();
  a.name = "a4-broken";
  a.bracket.add({0, 1, 2}, 0, Rational(1));  // [e1,e2,e3] = e4 + e1
  return a;
}

/// An invalid Leibniz bracket: n=2, dim 2, [e1,e1]=e2, [e1,e2]=e1.
inline LeibnizNAlgebra bad_leibniz22() {
  LeibnizNAlgebra a(2, 2, "bad-leibniz");
  a.at({0, 0})[1] = Rational(1);
  a.at({0, 1})[0] = Rational(1);
  return a;
}

/// Dense copy of a skew bracket, for the skew-vs-Leibniz validator agreement.
inline LeibnizNAlgebra as_leibniz(const NLieAlgebra& a) {
  LeibnizNAlgebra out(a.n, a.dim, a.name + "-dense");
  IndexTuple t(a.n, 0);
  if (a.dim > 0) do {
      Vec v = a.bracket_idx(t);
      auto cell = out.at(t);
      for (int k = 0; k < a.dim; ++k) cell[k] = v[k];
    } while (next_index(t, a.dim));
  return out;
}

/// Adjoint representation with one action matrix scaled; breaks (R1central).
inline Representation scaled_adjoint(const NLieAlgebra& g) {
  Representation r = adjoint_representation(g);
  r.rho[0] = Rational(2) * r.rho[0];
  return r;
}

/// Weak but not full: the abelian 3-Lie algebra on Q^4 acting on Q by
/// rho(e_i, e_j) = 1 for all i < j. (R1) holds (scalars commute, bracket is
/// zero); (R2) fails at x = e1, y = (e2,e3,e4).
inline Representation weak_not_full() {
  Representation r(abelian(3, 4), 1);
  for (auto& m : r.rho) m.at(0, 0) = Rational(1);
  return r;
}

/// Deterministic junk constants on a4 (fails R1 and R2).
inline Representation random_rep(const NLieAlgebra& g, int module_dim, unsigned seed) {
  Representation r(g, module_dim);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  for (auto& m : r.rho)
    for (int i = 0; i < module_dim; ++i)
      for (int j = 0; j < module_dim; ++j) m.at(i, j) = Rational(d(rng));
  return r;
}

inline Matrix random_matrix(int rows, int cols, unsigned seed) {
  Matrix m(rows, cols);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

// ------------------------------------------------------------------- LM side

/// (M, g, f) = (g, g, id) with the adjoint action.
inline LMAlgebra lm_id(const NLieAlgebra& g) {
  return LMAlgebra{g, adjoint_representation(g), Matrix::identity(g.dim), g.name + "-id-ad"};
}

/// f = 0 over the adjoint action (equivariance is trivial).
inline LMAlgebra lm_f0(const NLieAlgebra& g) {
  return LMAlgebra{g, adjoint_representation(g), Matrix(g.dim, g.dim), g.name + "-f0"};
}

/// lm_id with f replaced by a non-equivariant matrix.
inline LMAlgebra lm_broken_f(const NLieAlgebra& g) {
  LMAlgebra a = lm_id(g);
  a.name = g.name + "-broken-f";
  a.f = Matrix(g.dim, g.dim);
  a.f.at(0, 0) = Rational(1);
  a.f.at(0, 1) = Rational(1);  // e2 -> e1: not equivariant for a4 / so3q
  return a;
}

/// The criterion-7 scale fixture: base (M = Q^2 trivial over so3q, f = 0),
/// kernel target (V = W = Q^2, phi of rank 1, trivial actions).
inline LMAlgebra c7_base() {
  NLieAlgebra g = n2d3();
  return LMAlgebra{g, trivial_representation(g, 2), Matrix(3, 2), "c7"};
}

inline LMRepresentation c7_target(const LMAlgebra& base) {
  LMRepresentation r = trivial_lm_representation(base, 2, 2);
  r.phi.at(0, 0) = Rational(1);
  return r;
}

/// Fills an LMCochain of degree 2 from stacked block coordinates.
inline LMCochain cochain_from_coords(const LMAlgebra& a, const LMRepresentation& r, const Vec& v) {
  LMCochain c(a, r, 2);
  LMCochainDims d = lm_cochain_dims(a, r, 2);
  long pos = 0;
  for (long p = 0; p < d.omega / (r.wdim ? r.wdim : 1) && r.wdim; ++p)
    for (int w = 0; w < r.wdim; ++w) c.omega.value_at(p)[w] = v[pos++];
  for (long p = 0; p < d.nu / (r.vdim ? r.vdim : 1) && r.vdim; ++p)
    for (int w = 0; w < r.vdim; ++w) c.nu.value_at(p)[w] = v[pos++];
  for (long p = 0; p < d.theta / (r.wdim ? r.wdim : 1) && r.wdim; ++p)
    for (int w = 0; w < r.wdim; ++w) c.theta.value_at(p)[w] = v[pos++];
  return c;
}

/// Basis of Z^2 in the skew cochain space, as degree-2 cochains.
inline std::vector<LMCochain> z2_basis(const LMAlgebra& a, const LMRepresentation& r) {
  Matrix E = lm_skew_embedding(a, r, 2);
  Matrix D2E = lm_coboundary_matrix(a, r, 2) * E;
  std::vector<LMCochain> out;
  for (const auto& k : kernel_basis(D2E)) out.push_back(cochain_from_coords(a, r, E.apply(k)));
  return out;
}

inline DeformationTriple first_order(const LMAlgebra& a, const FormalDeformation& d) {
  DeformationTriple t(a);
  t.theta = d.theta[0];
  t.omega = d.omega[0];
  t.nu = d.nu[0];
  return t;
}

inline NijenhuisPair pair_e21() {
  NijenhuisPair p;
  p.N0 = Matrix(4, 4);
  p.N0.at(1, 0) = Rational(1);
  p.N1 = p.N0;
  return p;
}

inline NijenhuisPair pair_scalar(const LMAlgebra& a, const Rational& c) {
  NijenhuisPair p;
  p.N0 = c * Matrix::identity(a.g.dim);
  p.N1 = c * Matrix::identity(a.mdim());
  return p;
}

inline DeformationTriple random_triple(const LMAlgebra& a, unsigned seed) {
  DeformationTriple t(a);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  t.theta = random_matrix(a.g.dim, a.mdim(), seed);
  for (const auto& tu : wedge_basis(a.g.dim, 3)) {
    Vec v(a.g.dim);
    for (auto& q : v) q = Rational(d(rng));
    t.omega.set_value(t.omega.table().rank(tu), v);
  }
  for (const auto& tu : wedge_basis(a.g.dim, 2))
    for (int m = 0; m < a.mdim(); ++m) {
      std::array<long, 1> ranks{t.nu.table().rank(tu)};
      std::array<int, 1> slots{m};
      auto cell = t.nu.value_at(t.nu.position(ranks, slots));
      for (int k = 0; k < a.mdim(); ++k) cell[k] = Rational(d(rng));
    }
  return t;
}

}  // namespace fx

#endif
