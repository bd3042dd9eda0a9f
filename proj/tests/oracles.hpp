#ifndef NLAL_TESTS_ORACLES_HPP
#define NLAL_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library's assembly code paths: the
// coboundary matrix is rebuilt column by column by evaluating the four-sum
// formula on basis cochains, sharing only structure-constant lookups and the
// exact rank with the implementation.

#include "nlal/cohomology.hpp"

namespace oracle {

using namespace nlal;

/// Evaluates delta_p(w)(X_1..X_p, z) for a cochain given as raw coordinates
/// ((p-1) wedge ranks, z, v), straight from the four-sum formula.
inline Vec eval_four_sum(const Representation& r, int p, const Vec& w,
                         const std::vector<int>& blocks, int z) {
  const auto& a = r.algebra;
  const int dg = a.dim, dm = r.module_dim, n = a.n;
  const long dL = r.lt.count();
  auto wval = [&](const std::vector<int>& bl, int zz) {
    long idx = 0;
    for (int b : bl) idx = idx * dL + b;
    idx = (idx * dg + zz) * dm;
    return Vec(w.begin() + idx, w.begin() + idx + dm);
  };
  auto wval_tuple = [&](const std::vector<IndexTuple>& bl, int zz) {
    // normalize every block into rank coordinates
    Vec out(dm, Rational(0));
    int sign = 1;
    std::vector<int> ranks;
    for (const auto& t : bl) {
      auto [s, sorted] = normalize_wedge(t);
      if (s == 0) return out;
      sign *= s;
      ranks.push_back(static_cast<int>(r.lt.rank(sorted)));
    }
    out = wval(ranks, zz);
    if (sign < 0)
      for (auto& q : out) q = -q;
    return out;
  };
  Vec res(dm, Rational(0));
  std::vector<IndexTuple> X(p);
  for (int i = 0; i < p; ++i) X[i] = r.lt.basis[blocks[i]];
  for (int i = 0; i < p; ++i) {
    int sgn = ((i + 1) % 2 == 0) ? 1 : -1;  // (-1)^i, 1-based
    // (-1)^i w(..^i.., [X_i, z])
    std::vector<IndexTuple> sub;
    for (int q = 0; q < p; ++q)
      if (q != i) sub.push_back(X[q]);
    IndexTuple t = X[i];
    t.push_back(z);
    Vec b = a.bracket_idx(t);
    for (int l = 0; l < dg; ++l)
      if (!b[l].is_zero()) axpy(res, Rational(sgn) * b[l], wval_tuple(sub, l));
    // (-1)^{i+1} rho(X_i) w(..^i.., z)
    axpy(res, Rational(-sgn), r.rho_idx(X[i]).apply(wval_tuple(sub, z)));
  }
  {
    const IndexTuple& Xp = X[p - 1];
    std::vector<IndexTuple> sub(X.begin(), X.end() - 1);
    for (int i = 0; i < n - 1; ++i) {
      IndexTuple t;
      for (int q = 0; q < n - 1; ++q)
        if (q != i) t.push_back(Xp[q]);
      t.push_back(z);
      int e = n + p - (i + 1) + 1;
      int sgn = (e % 2 == 0) ? 1 : -1;
      axpy(res, Rational(sgn), r.rho_idx(t).apply(wval_tuple(sub, Xp[i])));
    }
  }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      // (-1)^i w(..^i.., X_i o X_j, .., z): expand the circle product directly
      int sgn = ((i + 1) % 2 == 0) ? 1 : -1;
      for (int s = 0; s < n - 1; ++s) {
        IndexTuple t = X[i];
        t.push_back(X[j][s]);
        Vec b = a.bracket_idx(t);
        for (int l = 0; l < dg; ++l) {
          if (b[l].is_zero()) continue;
          std::vector<IndexTuple> sub;
          for (int q = 0; q < p; ++q) {
            if (q == i) continue;
            if (q == j) {
              IndexTuple yy = X[j];
              yy[s] = l;
              sub.push_back(yy);
            } else {
              sub.push_back(X[q]);
            }
          }
          axpy(res, Rational(sgn) * b[l], wval_tuple(sub, z));
        }
      }
    }
  return res;
}

/// Column-by-column reassembly of delta_p, for comparison with the library.
inline Matrix coboundary_by_columns(const Representation& r, int p) {
  const long dL = r.lt.count();
  const int dg = r.algebra.dim, dm = r.module_dim;
  long cols = dg * static_cast<long>(dm);
  for (int i = 0; i < p - 1; ++i) cols *= dL;
  long rows = dg * static_cast<long>(dm);
  for (int i = 0; i < p; ++i) rows *= dL;
  Matrix D(static_cast<int>(rows), static_cast<int>(cols));
  for (long c = 0; c < cols; ++c) {
    Vec w(cols, Rational(0));
    w[c] = Rational(1);
    std::vector<int> blocks(p, 0);
    long row = 0;
    bool more = true;
    while (more) {
      for (int z = 0; z < dg; ++z) {
        Vec v = eval_four_sum(r, p, w, blocks, z);
        for (int q = 0; q < dm; ++q) D.at(static_cast<int>(row + q), static_cast<int>(c)) = v[q];
        row += dm;
      }
      more = dL > 0 && next_index(blocks, static_cast<int>(dL));
    }
  }
  return D;
}

}  // namespace oracle

#endif
