#ifndef NLAL_LEIBNIZ_HPP
#define NLAL_LEIBNIZ_HPP

#include <vector>

#include "nlal/nlie.hpp"
#include "nlal/report.hpp"

namespace nlal {

/// Binary (left) Leibniz algebra by structure constants:
/// x o (y o z) = (x o y) o z + y o (x o z).
struct LeibnizAlgebra {
  int dim = 0;
  std::vector<Vec> circ;  // circ[i*dim+j] = X_i o X_j in basis coordinates
  std::string name;

  LeibnizAlgebra() = default;
  explicit LeibnizAlgebra(int d, std::string n = "")
      : dim(d), circ(static_cast<std::size_t>(d) * d, Vec(d, Rational(0))), name(std::move(n)) {}

  const Vec& circ_idx(int i, int j) const { return circ[static_cast<std::size_t>(i) * dim + j]; }
  Vec& circ_idx(int i, int j) { return circ[static_cast<std::size_t>(i) * dim + j]; }

  Vec circ_vecs(const Vec& x, const Vec& y) const {
    Vec out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        axpy(out, x[i] * y[j], circ_idx(i, j));
      }
    }
    return out;
  }
};

inline Report validate_leibniz(const LeibnizAlgebra& L) {
  Report rep;
  rep.subject = L.name;
  auto& chk = rep.add("leibniz_rule");
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k) {
        Vec lhs(L.dim, Rational(0));
        const Vec& jk = L.circ_idx(j, k);
        for (int l = 0; l < L.dim; ++l)
          if (!jk[l].is_zero()) axpy(lhs, jk[l], L.circ_idx(i, l));
        Vec rhs(L.dim, Rational(0));
        const Vec& ij = L.circ_idx(i, j);
        for (int l = 0; l < L.dim; ++l)
          if (!ij[l].is_zero()) axpy(rhs, ij[l], L.circ_idx(l, k));
        const Vec& ik = L.circ_idx(i, k);
        for (int l = 0; l < L.dim; ++l)
          if (!ik[l].is_zero()) axpy(rhs, ik[l], L.circ_idx(j, l));
        chk.record(lhs - rhs, {{"x", {i + 1}}, {"y", {j + 1}}, {"z", {k + 1}}});
      }
  return rep;
}

/// Leibniz bimodule: per-basis-element matrices of the left action
/// m -> [X_i, m]_L and the right action m -> [m, X_i]_R.
struct LeibnizModule {
  int mdim = 0;
  std::vector<Matrix> left, right;

  LeibnizModule() = default;
  LeibnizModule(int ldim, int md)
      : mdim(md), left(ldim, Matrix(md, md)), right(ldim, Matrix(md, md)) {}
};

namespace detail {

inline Matrix action_at(const std::vector<Matrix>& acts, const Vec& coeffs, int mdim) {
  Matrix m(mdim, mdim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) m = m + (coeffs[i] * acts[i]);
  return m;
}

inline Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace detail

/// Checks (LLM), (LML), (MLL) and, redundantly, (MMM); the redundancy catches
/// sign errors in either action.
inline Report validate_leibniz_module(const LeibnizAlgebra& L, const LeibnizModule& M) {
  Report rep;
  auto& llm = rep.add("LLM");
  auto& lml = rep.add("LML");
  auto& mll = rep.add("MLL");
  auto& mmm = rep.add("MMM");
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Matrix lc = detail::action_at(M.left, L.circ_idx(i, j), M.mdim);
      Matrix rc = detail::action_at(M.right, L.circ_idx(i, j), M.mdim);
      auto args = std::vector<std::pair<std::string, std::vector<int>>>{{"x", {i + 1}}, {"y", {j + 1}}};
      llm.record(detail::flatten(lc - (M.left[i] * M.left[j] - M.left[j] * M.left[i])), args);
      lml.record(detail::flatten(rc - (M.right[j] * M.right[i] + M.left[i] * M.right[j])), args);
      mll.record(detail::flatten(rc - (M.left[i] * M.right[j] - M.right[j] * M.left[i])), args);
      mmm.record(detail::flatten(M.right[j] * M.right[i] + M.right[j] * M.left[i]), args);
    }
  return rep;
}

/// The Leibniz algebra of fundamental objects L = wedge^{n-1} g with
/// X o Y = sum_i (y1,..,[x1..x_{n-1},y_i],..,y_{n-1}); rejects algebras that
/// fail the fundamental identity.
inline LeibnizAlgebra fundamental_leibniz(const NLieAlgebra& a) {
  Report v = validate_n_lie(a);
  if (!v.pass()) throw ValidationError("fundamental_leibniz: input is not an n-Lie algebra", v);
  WedgeTable lt(a.dim, a.n - 1);
  LeibnizAlgebra L(static_cast<int>(lt.count()), a.name + ".L");
  for (long i = 0; i < lt.count(); ++i)
    for (long j = 0; j < lt.count(); ++j) {
      const IndexTuple& X = lt.basis[i];
      const IndexTuple& Y = lt.basis[j];
      Vec& out = L.circ_idx(static_cast<int>(i), static_cast<int>(j));
      for (int s = 0; s < a.n - 1; ++s) {
        IndexTuple t = X;
        t.push_back(Y[s]);
        Vec w = a.bracket_idx(t);
        for (int l = 0; l < a.dim; ++l) {
          if (w[l].is_zero()) continue;
          IndexTuple yy = Y;
          yy[s] = l;
          auto [sign, sorted] = normalize_wedge(yy);
          if (sign == 0) continue;
          out[lt.rank(sorted)] += Rational(sign) * w[l];
        }
      }
    }
  return L;
}

}  // namespace nlal

#endif
