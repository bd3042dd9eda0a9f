#ifndef NLAL_LM_HPP
#define NLAL_LM_HPP

#include <string>

#include "nlal/representation.hpp"

namespace nlal {

/// n-Lie algebra in the category of linear maps: an equivariant f: M -> g
/// over a representation rho of g on M, i.e.
/// f(rho(x1..x_{n-1})(m)) = [x1,..,x_{n-1},f(m)].
struct LMAlgebra {
  NLieAlgebra g;
  Representation rho;  // of g on M
  Matrix f;            // dim g x dim M
  std::string name;

  int mdim() const { return rho.module_dim; }

  /// Module bracket [x1,..,x_{n-1},m] = rho(x1,..,x_{n-1})(m), on vectors.
  Vec action_vecs(std::span<const Vec> xs, const Vec& m) const { return rho.rho_vecs(xs).apply(m); }
};

/// Validates the underlying algebra, the representation, and the
/// equivariance of f, each as a named check.
inline Report validate_lm(const LMAlgebra& a) {
  Report rep;
  rep.subject = a.name;
  if (a.rho.algebra.n != a.g.n || a.rho.algebra.dim != a.g.dim ||
      !(a.rho.algebra.bracket == a.g.bracket)) {
    auto& c = rep.add("coherence");
    c.count_fail(Witness{{}, {}, "rho's algebra copy differs from g"});
    return rep;
  }
  rep.absorb(validate_n_lie(a.g), "g.");
  rep.absorb(validate_representation(a.rho, RepMode::full), "rho.");
  if (a.f.rows() != a.g.dim || a.f.cols() != a.mdim()) {
    auto& s = rep.add("f.shape");
    s.count_fail(Witness{{}, {}, "f must be dim(g) x dim(M)"});
    return rep;
  }
  auto& eq = rep.add("f.equivariance");
  for (const auto& X : a.rho.lt.basis) {
    Matrix adX = ad_matrix(a.g, X);
    Matrix lhs = a.f * a.rho.rho_idx(X);
    Matrix rhs = adX * a.f;
    for (int m = 0; m < a.mdim(); ++m) {
      Vec res(a.g.dim);
      for (int k = 0; k < a.g.dim; ++k) res[k] = lhs.at(k, m) - rhs.at(k, m);
      eq.record(res, {{"x", to_one_based(X)}, {"m", {m + 1}}});
    }
  }
  return rep;
}

/// Embedding-tensor identity f(rho(f m1,..,f m_{n-1})(m_n)) = [f m1,..,f mn]
/// on all basis tuples of M; also notes whether f is surjective, the case in
/// which the identity is equivalent to equivariance.
inline Report is_embedding_tensor(const LMAlgebra& a) {
  Report rep;
  rep.subject = a.name;
  auto& chk = rep.add("embedding_tensor");
  const int dm = a.mdim(), n = a.g.n;
  std::vector<Vec> fcols(dm);
  for (int j = 0; j < dm; ++j) fcols[j] = a.f.col(j);
  IndexTuple t(n, 0);
  do {
    std::vector<Vec> head(n - 1);
    for (int q = 0; q < n - 1; ++q) head[q] = fcols[t[q]];
    Vec lhs = a.f.apply(a.rho.rho_vecs(head).apply(unit_vec(dm, t.back())));
    std::vector<Vec> args(n);
    for (int q = 0; q < n; ++q) args[q] = fcols[t[q]];
    Vec rhs = a.g.bracket_vecs(args);
    chk.record(lhs - rhs, {{"m", to_one_based(t)}});
  } while (next_index(t, dm));
  auto& surj = rep.add("f_surjective");
  surj.instances = 1;
  if (rank(a.f) != a.g.dim) {
    surj.note = "f is not surjective (rank " + std::to_string(rank(a.f)) + " < " +
                std::to_string(a.g.dim) + "); the identity is then weaker than equivariance";
  } else {
    surj.note = "f is surjective";
  }
  return rep;
}

/// Leibniz n-bracket on M induced by f: [m1,..,mn] = rho(f m1,..,f m_{n-1})(m_n).
/// Rejects input failing validate_lm.
inline LeibnizNAlgebra induced_leibniz_bracket(const LMAlgebra& a) {
  Report v = validate_lm(a);
  if (!v.pass()) throw ValidationError("induced_leibniz_bracket: input fails validate_lm", v);
  const int dm = a.mdim(), n = a.g.n;
  LeibnizNAlgebra out(n, dm, a.name + ".M");
  std::vector<Vec> fcols(dm);
  for (int j = 0; j < dm; ++j) fcols[j] = a.f.col(j);
  IndexTuple t(n, 0);
  do {
    std::vector<Vec> head(n - 1);
    for (int q = 0; q < n - 1; ++q) head[q] = fcols[t[q]];
    Vec val = a.rho.rho_vecs(head).apply(unit_vec(dm, t.back()));
    auto cell = out.at(t);
    for (int k = 0; k < dm; ++k) cell[k] = val[k];
  } while (next_index(t, dm));
  return out;
}

/// Homomorphism of LM algebras: phi0 an algebra homomorphism, phi1
/// equivariant, f' phi1 = phi0 f.
struct LMMorphism {
  Matrix phi0;  // g -> g'
  Matrix phi1;  // M -> M'
};

inline Report validate_lm_morphism(const LMMorphism& m, const LMAlgebra& a, const LMAlgebra& b) {
  if (m.phi0.rows() != b.g.dim || m.phi0.cols() != a.g.dim || m.phi1.rows() != b.mdim() ||
      m.phi1.cols() != a.mdim())
    throw ShapeError("validate_lm_morphism: matrix shapes");
  Report rep;
  rep.subject = a.name + " -> " + b.name;
  auto& sq = rep.add("square");
  {
    Matrix lhs = b.f * m.phi1;
    Matrix rhs = m.phi0 * a.f;
    sq.record(detail::flatten(lhs - rhs), {});
  }
  rep.absorb(is_nlie_homomorphism(m.phi0, a.g, b.g), "phi0.");
  auto& eqv = rep.add("phi1.equivariance");
  std::vector<Vec> cols(a.g.dim);
  for (int j = 0; j < a.g.dim; ++j) cols[j] = m.phi0.col(j);
  for (const auto& X : a.rho.lt.basis) {
    std::vector<Vec> im(a.g.n - 1);
    for (int q = 0; q < a.g.n - 1; ++q) im[q] = cols[X[q]];
    Matrix lhs = m.phi1 * a.rho.rho_idx(X);
    Matrix rhs = b.rho.rho_vecs(im) * m.phi1;
    eqv.record(detail::flatten(lhs - rhs), {{"x", to_one_based(X)}});
  }
  return rep;
}

/// Prop-3.3 criterion: (x,m) -> (x, f(m)) from g |x M to g |x g is an n-Lie
/// homomorphism iff (M,g,f) is an LM algebra. Returns the homomorphism check.
inline Report id_plus_f_check(const LMAlgebra& a) {
  NLieAlgebra sm = semidirect_product(a.rho);
  NLieAlgebra sg = semidirect_product(adjoint_representation(a.g));
  const int dg = a.g.dim, dm = a.mdim();
  Matrix phi(2 * dg, dg + dm);
  for (int i = 0; i < dg; ++i) phi.at(i, i) = Rational(1);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dm; ++j) phi.at(dg + i, dg + j) = a.f.at(i, j);
  Report rep = is_nlie_homomorphism(phi, sm, sg);
  rep.subject = a.name + ": id+f";
  return rep;
}

/// Example constructor: M = wedge^n g with the diagonal action and
/// f = [.,..,.]: wedge^n g -> g.
inline LMAlgebra wedge_power_example(const NLieAlgebra& g) {
  Report v = validate_n_lie(g);
  if (!v.pass()) throw ValidationError("wedge_power_example: input fails validate_n_lie", v);
  WedgeTable wn(g.dim, g.n);
  const int dm = static_cast<int>(wn.count());
  Representation rho(g, dm);
  for (long Xr = 0; Xr < rho.lt.count(); ++Xr) {
    const IndexTuple& X = rho.lt.basis[Xr];
    Matrix& m = rho.rho[Xr];
    for (long yr = 0; yr < wn.count(); ++yr) {
      const IndexTuple& Y = wn.basis[yr];
      for (int s = 0; s < g.n; ++s) {
        IndexTuple t = X;
        t.push_back(Y[s]);
        Vec w = g.bracket_idx(t);
        for (int l = 0; l < g.dim; ++l) {
          if (w[l].is_zero()) continue;
          IndexTuple yy = Y;
          yy[s] = l;
          auto [sign, sorted] = normalize_wedge(yy);
          if (sign == 0) continue;
          m.at(static_cast<int>(wn.rank(sorted)), static_cast<int>(yr)) += Rational(sign) * w[l];
        }
      }
    }
  }
  LMAlgebra out{g, std::move(rho), Matrix(g.dim, dm), g.name + ".wedge^n"};
  for (long yr = 0; yr < wn.count(); ++yr) {
    Vec b = g.bracket_idx(wn.basis[yr]);
    for (int k = 0; k < g.dim; ++k) out.f.at(k, static_cast<int>(yr)) = b[k];
  }
  return out;
}

/// Example constructor: the projection pi: g |x_H V -> g with the action
/// rho~(x1..x_{n-1})(x+v) = [x1..x_{n-1},x] + rho(x1..x_{n-1})(v); its
/// induced bracket is exactly the hemisemidirect one.
inline LMAlgebra hemisemidirect_projection_example(const Representation& r) {
  Report v = validate_representation(r, RepMode::full);
  if (!v.pass()) throw ValidationError("hemisemidirect_projection_example: not a representation", v);
  const auto& g = r.algebra;
  const int dg = g.dim, dv = r.module_dim;
  Representation big(g, dg + dv);
  for (long Xr = 0; Xr < big.lt.count(); ++Xr) {
    Matrix ad = ad_matrix(g, big.lt.basis[Xr]);
    Matrix& m = big.rho[Xr];
    for (int i = 0; i < dg; ++i)
      for (int j = 0; j < dg; ++j) m.at(i, j) = ad.at(i, j);
    const Matrix& rr = r.rho[Xr];
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j) m.at(dg + i, dg + j) = rr.at(i, j);
  }
  LMAlgebra out{g, std::move(big), Matrix(dg, dg + dv), g.name + ".piH"};
  for (int i = 0; i < dg; ++i) out.f.at(i, i) = Rational(1);
  return out;
}

}  // namespace nlal

#endif
