#ifndef NLAL_COHOMOLOGY_HPP
#define NLAL_COHOMOLOGY_HPP

#include <array>
#include <vector>

#include "nlal/representation.hpp"

namespace nlal {

/// Loday coboundary d_{p-1}: CL^{p-1}(L,M) -> CL^p(L,M) as an exact matrix.
/// Cochain coordinates: L-basis tuple row-major, then the module coordinate.
inline Matrix loday_coboundary(const LeibnizAlgebra& L, const LeibnizModule& M, int p) {
  if (p < 1) throw std::invalid_argument("loday_coboundary: p >= 1");
  const int dL = L.dim, md = M.mdim;
  long rows = 1, cols = 1;
  for (int i = 0; i < p; ++i) rows *= dL;
  for (int i = 0; i < p - 1; ++i) cols *= dL;
  Matrix D(static_cast<int>(rows * md), static_cast<int>(cols * md));
  if (dL == 0) return D;
  std::vector<int> out(p, 0);
  do {
    long ob = tuple_rank(out, dL) * md;
    // sum_{i=1}^{p-1} (-1)^{i+1} [X_i, w(..^i..)]_L
    for (int a = 0; a + 1 < p; ++a) {
      std::vector<int> sub(out.begin(), out.end());
      sub.erase(sub.begin() + a);
      long sb = tuple_rank(sub, dL) * md;
      int sgn = (a % 2 == 0) ? 1 : -1;
      const Matrix& m = M.left[out[a]];
      for (int r = 0; r < md; ++r)
        for (int c = 0; c < md; ++c)
          if (!m.at(r, c).is_zero()) D.at(static_cast<int>(ob) + r, static_cast<int>(sb) + c) += Rational(sgn) * m.at(r, c);
    }
    // (-1)^p [w(X_1..X_{p-1}), X_p]_R
    {
      std::vector<int> sub(out.begin(), out.end() - 1);
      long sb = tuple_rank(sub, dL) * md;
      int sgn = (p % 2 == 0) ? 1 : -1;
      const Matrix& m = M.right[out[p - 1]];
      for (int r = 0; r < md; ++r)
        for (int c = 0; c < md; ++c)
          if (!m.at(r, c).is_zero()) D.at(static_cast<int>(ob) + r, static_cast<int>(sb) + c) += Rational(sgn) * m.at(r, c);
    }
    // sum_{i<j} (-1)^i w(..^i.., X_i o X_j, ..)
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) {
        const Vec& cv = L.circ_idx(out[a], out[b]);
        for (int k = 0; k < dL; ++k) {
          if (cv[k].is_zero()) continue;
          std::vector<int> sub(out.begin(), out.end());
          sub[b] = k;
          sub.erase(sub.begin() + a);
          long sb = tuple_rank(sub, dL) * md;
          int sgn = (a % 2 == 0) ? -1 : 1;  // (-1)^{a+1}
          for (int r = 0; r < md; ++r)
            D.at(static_cast<int>(ob) + r, static_cast<int>(sb) + r) += Rational(sgn) * cv[k];
        }
      }
  } while (next_index(out, dL));
  return D;
}

/// Degree-p n-Lie cochain space C^p = Hom((tensor^{p-1} L) (x) g, V):
/// coordinates (L-ranks.., z, v), row-major. Dimensions of the canonical
/// matrix spaces.
inline long nlie_cochain_dim(const Representation& r, int p) {
  long d = static_cast<long>(r.algebra.dim) * r.module_dim;
  for (int i = 0; i < p - 1; ++i) d *= r.lt.count();
  return d;
}

/// Direct assembly of the four-sum coboundary formula
/// delta_p: C^p -> C^{p+1}.
inline Matrix nlie_coboundary_direct(const Representation& r, int p) {
  if (p < 1) throw std::invalid_argument("nlie_coboundary_direct: p >= 1");
  const auto& a = r.algebra;
  LeibnizAlgebra L = fundamental_leibniz(a);
  const int dL = L.dim, dg = a.dim, dm = r.module_dim, n = a.n;
  Matrix D(static_cast<int>(nlie_cochain_dim(r, p + 1)), static_cast<int>(nlie_cochain_dim(r, p)));
  if (dL == 0) return D;
  auto col_of = [&](const std::vector<int>& blocks, int z, int v) {
    long c = tuple_rank(blocks, dL);
    return static_cast<int>((c * dg + z) * dm + v);
  };
  std::vector<int> out(p, 0);
  do {
    for (int z = 0; z < dg; ++z) {
      long row0 = (tuple_rank(out, dL) * dg + z) * static_cast<long>(dm);
      // sum 1: (-1)^i w(..^i.., [X_i, z]) ; sum 2: (-1)^{i+1} rho(X_i) w(..^i.., z)
      for (int a0 = 0; a0 < p; ++a0) {
        std::vector<int> sub(out.begin(), out.end());
        sub.erase(sub.begin() + a0);
        int sgn = (a0 % 2 == 0) ? -1 : 1;  // (-1)^{i}, i = a0+1
        IndexTuple t = r.lt.basis[out[a0]];
        t.push_back(z);
        Vec b = a.bracket_idx(t);
        for (int l = 0; l < dg; ++l)
          if (!b[l].is_zero())
            for (int v = 0; v < dm; ++v)
              D.at(static_cast<int>(row0) + v, col_of(sub, l, v)) += Rational(sgn) * b[l];
        const Matrix& m = r.rho[out[a0]];
        for (int vo = 0; vo < dm; ++vo)
          for (int vi = 0; vi < dm; ++vi)
            if (!m.at(vo, vi).is_zero())
              D.at(static_cast<int>(row0) + vo, col_of(sub, z, vi)) -= Rational(sgn) * m.at(vo, vi);
      }
      // sum 3: i = 1..n-1 over the last block X_p = (x_1..x_{n-1}):
      // (-1)^{n+p-i+1} rho(x_1,..,^x_i,..,x_{n-1}, z) w(X_1..X_{p-1}, x_i)
      {
        const IndexTuple& Xp = r.lt.basis[out[p - 1]];
        std::vector<int> sub(out.begin(), out.end() - 1);
        for (int i = 0; i < n - 1; ++i) {
          IndexTuple t;
          for (int q = 0; q < n - 1; ++q)
            if (q != i) t.push_back(Xp[q]);
          t.push_back(z);
          Matrix m = r.rho_idx(t);
          int e = n + p - (i + 1) + 1;
          int sgn = (e % 2 == 0) ? 1 : -1;
          for (int vo = 0; vo < dm; ++vo)
            for (int vi = 0; vi < dm; ++vi)
              if (!m.at(vo, vi).is_zero())
                D.at(static_cast<int>(row0) + vo, col_of(sub, Xp[i], vi)) += Rational(sgn) * m.at(vo, vi);
        }
      }
      // sum 4: (-1)^i w(..^i.., X_i o X_j, .., z)
      for (int a0 = 0; a0 < p; ++a0)
        for (int b0 = a0 + 1; b0 < p; ++b0) {
          const Vec& cv = L.circ_idx(out[a0], out[b0]);
          for (int k = 0; k < dL; ++k) {
            if (cv[k].is_zero()) continue;
            std::vector<int> sub(out.begin(), out.end());
            sub[b0] = k;
            sub.erase(sub.begin() + a0);
            int sgn = (a0 % 2 == 0) ? -1 : 1;
            for (int v = 0; v < dm; ++v)
              D.at(static_cast<int>(row0) + v, col_of(sub, z, v)) += Rational(sgn) * cv[k];
          }
        }
    }
  } while (next_index(out, dL));
  return D;
}

namespace detail {

/// Reindexes a Loday matrix over Hom(g,V) (value index v*dg+z, the row-major
/// matrix flattening) into cochain coordinates (.., z, v).
inline Matrix hom_to_cochain_layout(const Matrix& D, int out_blocks, int in_blocks, int dL, int dg, int dm) {
  long ro = 1, ci = 1;
  for (int i = 0; i < out_blocks; ++i) ro *= dL;
  for (int i = 0; i < in_blocks; ++i) ci *= dL;
  Matrix R(D.rows(), D.cols());
  auto remap = [&](long tuples, long idx) {
    long t = idx / (static_cast<long>(dg) * dm);
    long h = idx % (static_cast<long>(dg) * dm);
    long v = h / dg, z = h % dg;
    (void)tuples;
    return (t * dg + z) * dm + v;
  };
  for (int i = 0; i < D.rows(); ++i) {
    long ri = remap(ro, i);
    for (int j = 0; j < D.cols(); ++j) {
      if (D.at(i, j).is_zero()) continue;
      R.at(static_cast<int>(ri), static_cast<int>(remap(ci, j))) = D.at(i, j);
    }
  }
  return R;
}

}  // namespace detail

/// The same coboundary assembled through the Leibniz route: Loday d on
/// CL^{p-1}(L, Hom(g,V)) with the hom_module actions, reindexed into cochain
/// coordinates.
inline Matrix nlie_coboundary_leibniz(const Representation& r, int p) {
  LeibnizAlgebra L = fundamental_leibniz(r.algebra);
  LeibnizModule M = hom_module(r);
  Matrix D = loday_coboundary(L, M, p);
  return detail::hom_to_cochain_layout(D, p, p - 1, L.dim, r.algebra.dim, r.module_dim);
}

/// delta_p by both constructions; throws if they ever disagree.
inline Matrix nlie_coboundary(const Representation& r, int p) {
  Matrix direct = nlie_coboundary_direct(r, p);
  Matrix leib = nlie_coboundary_leibniz(r, p);
  if (!(direct == leib)) throw std::logic_error("nlie_coboundary: assembly routes disagree");
  return direct;
}

namespace detail {

/// Definition-2.9 residual of a 2-cochain given an evaluator
/// w(block tuple of n-1 args, z).
template <class Eval>
Report two_cocycle_report(const Representation& r, Eval&& w) {
  const auto& a = r.algebra;
  const int n = a.n, dg = a.dim, dm = r.module_dim;
  Report rep;
  auto& chk = rep.add("two_cocycle");
  IndexTuple y(n, 0);
  for (const auto& X : r.lt.basis) {
    std::fill(y.begin(), y.end(), 0);
    do {
      Vec res(dm, Rational(0));
      // w(X, [y]) ...
      Vec br = a.bracket_idx(y);
      for (int l = 0; l < dg; ++l)
        if (!br[l].is_zero()) axpy(res, br[l], w(X, l));
      // ... + rho(X) w(y_1..y_{n-1}, y_n)
      IndexTuple yb(y.begin(), y.end() - 1);
      axpy(res, Rational(1), r.rho_idx(X).apply(w(yb, y.back())));
      // - sum_i w(y with slot i -> [X, y_i])
      for (int i = 0; i < n; ++i) {
        IndexTuple t = X;
        t.push_back(y[i]);
        Vec b = a.bracket_idx(t);
        for (int l = 0; l < dg; ++l) {
          if (b[l].is_zero()) continue;
          if (i < n - 1) {
            IndexTuple yy = yb;
            yy[i] = l;
            axpy(res, -b[l], w(yy, y.back()));
          } else {
            axpy(res, -b[l], w(yb, l));
          }
        }
      }
      // - sum_i (-1)^{n-i} rho(y minus i) w(X, y_i)
      for (int i = 0; i < n; ++i) {
        IndexTuple rest;
        for (int q = 0; q < n; ++q)
          if (q != i) rest.push_back(y[q]);
        int sgn = ((n - (i + 1)) % 2 == 0) ? 1 : -1;
        axpy(res, Rational(-sgn), r.rho_idx(rest).apply(w(X, y[i])));
      }
      chk.record(res, {{"x", to_one_based(X)}, {"y", to_one_based(y)}});
    } while (next_index(y, dg));
  }
  return rep;
}

}  // namespace detail

/// 2-cocycle test for the fully skew storage (w: wedge^n g -> V).
inline Report is_two_cocycle(const Representation& r, const SkewTensor& w) {
  if (w.dim() != r.algebra.dim || w.arity() != r.algebra.n || w.target_dim() != r.module_dim)
    throw ShapeError("is_two_cocycle: cochain shape mismatch");
  return detail::two_cocycle_report(r, [&](const IndexTuple& block, int z) {
    IndexTuple t = block;
    t.push_back(z);
    return w.eval(t);
  });
}

/// 2-cocycle test for the ambient block storage (skew inside the single
/// wedge block only).
inline Report is_two_cocycle(const Representation& r, const BlockCochain& w) {
  if (w.gdim() != r.algebra.dim || w.blocks() != 1 || w.block_arity() != r.algebra.n - 1 ||
      w.slot_dims() != std::vector<int>{r.algebra.dim} || w.target_dim() != r.module_dim)
    throw ShapeError("is_two_cocycle: cochain shape mismatch");
  return detail::two_cocycle_report(r, [&](const IndexTuple& block, int z) {
    std::array<IndexTuple, 1> blocks{block};
    std::array<int, 1> slots{z};
    return w.eval(blocks, slots);
  });
}

struct CohomologyDims {
  int degree = 0;
  long cochain = 0, cocycles = 0, coboundaries = 0, cohomology = 0;
};

/// Exact dimensions: Z^p = nullity(delta_p), B^p = rank(delta_{p-1})
/// (0 at the minimal degree p = 1), H = Z - B.
inline CohomologyDims cohomology_dim(const Representation& r, int p) {
  CohomologyDims d;
  d.degree = p;
  Matrix Dp = nlie_coboundary(r, p);
  d.cochain = nlie_cochain_dim(r, p);
  d.cocycles = d.cochain - rank(Dp);
  d.coboundaries = p > 1 ? rank(nlie_coboundary(r, p - 1)) : 0;
  d.cohomology = d.cocycles - d.coboundaries;
  return d;
}

}  // namespace nlal

#endif
