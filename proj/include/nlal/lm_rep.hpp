#ifndef NLAL_LM_REP_HPP
#define NLAL_LM_REP_HPP

#include <vector>

#include "nlal/lm.hpp"

namespace nlal {

/// Representation of an LM algebra on an object (V, W, phi): a pair of
/// g-representations rho1 (on V) and rho2 (on W), and
/// rho3: g^{(x)(n-2)} (x) M -> Hom(W,V) with the compatibility conditions of
/// the definition. The g-slots of rho3 are plain (no symmetry imposed).
struct LMRepresentation {
  int vdim = 0, wdim = 0;
  Matrix phi;           // W <- V, wdim x vdim
  Representation rho1;  // g on V
  Representation rho2;  // g on W
  std::vector<Matrix> rho3;  // [(g-tuple rank) * dM + m] -> vdim x wdim

  /// rho3 at a plain (n-2)-tuple of g-indices and a basis index of M.
  const Matrix& rho3_at(const IndexTuple& gt, int m, int dg, int dM) const {
    return rho3[static_cast<std::size_t>(tuple_rank(gt, dg)) * dM + m];
  }
  Matrix& rho3_at(const IndexTuple& gt, int m, int dg, int dM) {
    return rho3[static_cast<std::size_t>(tuple_rank(gt, dg)) * dM + m];
  }

  /// Multilinear rho3 on g-vectors and an M-vector.
  Matrix rho3_vecs(std::span<const Vec> gs, const Vec& m, int dg, int dM) const {
    Matrix out(vdim, wdim);
    std::vector<int> pick(gs.size(), 0);
    auto sup = detail::supports(gs);
    std::vector<int> radix(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (sup[i].empty()) return out;
      radix[i] = static_cast<int>(sup[i].size());
    }
    IndexTuple t(gs.size());
    do {
      Rational c(1);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        t[i] = sup[i][pick[i]];
        c *= gs[i][t[i]];
      }
      for (int mi = 0; mi < dM; ++mi)
        if (!m[mi].is_zero()) out = out + ((c * m[mi]) * rho3_at(t, mi, dg, dM));
    } while (next_index(pick, radix));
    return out;
  }
};

inline LMRepresentation trivial_lm_representation(const LMAlgebra& a, int vdim, int wdim) {
  LMRepresentation r;
  r.vdim = vdim;
  r.wdim = wdim;
  r.phi = Matrix(wdim, vdim);
  r.rho1 = trivial_representation(a.g, vdim);
  r.rho2 = trivial_representation(a.g, wdim);
  std::size_t cnt = 1;
  for (int i = 0; i < a.g.n - 2; ++i) cnt *= static_cast<std::size_t>(a.g.dim);
  r.rho3.assign(cnt * a.mdim(), Matrix(vdim, wdim));
  return r;
}

/// Adjoint representation of (M,g,f) on itself: (V,W,phi) = (M,g,f),
/// rho1 = rho, rho2 = ad, rho3(x1..x_{n-2}, m)(w) = -rho(x1..x_{n-2}, w)(m).
inline LMRepresentation adjoint_lm_representation(const LMAlgebra& a) {
  Report v = validate_lm(a);
  if (!v.pass()) throw ValidationError("adjoint_lm_representation: input fails validate_lm", v);
  const int dg = a.g.dim, dM = a.mdim(), n = a.g.n;
  LMRepresentation r;
  r.vdim = dM;
  r.wdim = dg;
  r.phi = a.f;
  r.rho1 = a.rho;
  r.rho2 = adjoint_representation(a.g);
  std::size_t cnt = 1;
  for (int i = 0; i < n - 2; ++i) cnt *= static_cast<std::size_t>(dg);
  r.rho3.assign(cnt * dM, Matrix(dM, dg));
  IndexTuple gt(n - 2, 0);
  do {
    for (int m = 0; m < dM; ++m) {
      Matrix& mat = r.rho3_at(gt, m, dg, dM);
      for (int w = 0; w < dg; ++w) {
        IndexTuple t = gt;
        t.push_back(w);
        Matrix rm = a.rho.rho_idx(t);
        for (int vv = 0; vv < dM; ++vv) mat.at(vv, w) = -rm.at(vv, m);
      }
    }
  } while (!gt.empty() && next_index(gt, dg));
  return r;
}

/// Checks conditions (18)-(23) exhaustively on basis tuples, one named check
/// per equation. rho1/rho2 are validated as full representations first.
inline Report validate_lm_representation(const LMRepresentation& r, const LMAlgebra& a) {
  const int dg = a.g.dim, dM = a.mdim(), n = a.g.n;
  const int dV = r.vdim, dW = r.wdim;
  Report rep;
  rep.subject = a.name;
  rep.absorb(validate_representation(r.rho1, RepMode::full), "rho1.");
  rep.absorb(validate_representation(r.rho2, RepMode::full), "rho2.");

  auto& e18 = rep.add("eq18.phi_equivariance");
  for (const auto& X : r.rho1.lt.basis)
    e18.record(detail::flatten(r.phi * r.rho1.rho_idx(X) - r.rho2.rho_idx(X) * r.phi),
               {{"x", to_one_based(X)}});

  auto& e19 = rep.add("eq19.rho3_over_f");
  {
    IndexTuple gt(n - 2, 0);
    do {
      for (int m = 0; m < dM; ++m) {
        // phi rho3(x,m) = rho2(x1..x_{n-2}, f(m)) as maps W -> W
        Matrix lhs = r.phi * r.rho3_at(gt, m, dg, dM);
        std::vector<Vec> args;
        for (int q : gt) args.push_back(unit_vec(dg, q));
        args.push_back(a.f.col(m));
        Matrix rhs = r.rho2.rho_vecs(args);
        e19.record(detail::flatten(lhs - rhs), {{"x", to_one_based(gt)}, {"m", {m + 1}}});
      }
    } while (!gt.empty() && next_index(gt, dg));
  }

  auto& e20 = rep.add("eq20.rho1_rho3");
  for (const auto& X : r.rho1.lt.basis) {
    IndexTuple Y(n - 2, 0);
    do {
      for (int m = 0; m < dM; ++m) {
        Matrix lhs = r.rho1.rho_idx(X) * r.rho3_at(Y, m, dg, dM);
        // rho3(y, rho(X)m) + rho3(y,m) rho2(X) + sum_i rho3(y..[X,y_i]..,m)
        Matrix rhs(dV, dW);
        Vec rm = a.rho.rho_idx(X).apply(unit_vec(dM, m));
        for (int mm = 0; mm < dM; ++mm)
          if (!rm[mm].is_zero()) rhs = rhs + (rm[mm] * r.rho3_at(Y, mm, dg, dM));
        rhs = rhs + (r.rho3_at(Y, m, dg, dM) * r.rho2.rho_idx(X));
        for (int i = 0; i < n - 2; ++i) {
          IndexTuple t = X;
          t.push_back(Y[i]);
          Vec b = a.g.bracket_idx(t);
          for (int l = 0; l < dg; ++l) {
            if (b[l].is_zero()) continue;
            IndexTuple yy = Y;
            yy[i] = l;
            rhs = rhs + (b[l] * r.rho3_at(yy, m, dg, dM));
          }
        }
        e20.record(detail::flatten(lhs - rhs),
                   {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
      }
    } while (!Y.empty() && next_index(Y, dg));
  }

  auto& e21 = rep.add("eq21.rho3_of_action");
  {
    IndexTuple X(n - 2, 0);
    do {
      for (const auto& Y : r.rho1.lt.basis)
        for (int m = 0; m < dM; ++m) {
          // rho3(x, rho(Y)m) = rho1(Y) rho3(x,m) + sum_i (-1)^{n-i} rho3(y minus i, m) rho2(x.., y_i)
          Matrix lhs(dV, dW);
          Vec rm = a.rho.rho_idx(Y).apply(unit_vec(dM, m));
          for (int mm = 0; mm < dM; ++mm)
            if (!rm[mm].is_zero()) lhs = lhs + (rm[mm] * r.rho3_at(X, mm, dg, dM));
          Matrix rhs = r.rho1.rho_idx(Y) * r.rho3_at(X, m, dg, dM);
          for (int i = 0; i < n - 1; ++i) {
            IndexTuple rest;
            for (int q = 0; q < n - 1; ++q)
              if (q != i) rest.push_back(Y[q]);
            IndexTuple t = X;
            t.push_back(Y[i]);
            int sgn = ((n - (i + 1)) % 2 == 0) ? 1 : -1;
            rhs = rhs + (Rational(sgn) * (r.rho3_at(rest, m, dg, dM) * r.rho2.rho_idx(t)));
          }
          e21.record(detail::flatten(lhs - rhs),
                     {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
        }
    } while (!X.empty() && next_index(X, dg));
  }

  if (n >= 3) {
    auto& e22 = rep.add("eq22.rho3_of_bracket");
    IndexTuple X(n - 3, 0);
    do {
      for (const auto& Y : wedge_basis(dg, n))
        for (int m = 0; m < dM; ++m) {
          Vec br = a.g.bracket_idx(Y);
          Matrix lhs(dV, dW);
          for (int l = 0; l < dg; ++l) {
            if (br[l].is_zero()) continue;
            IndexTuple t = X;
            t.push_back(l);
            lhs = lhs + (br[l] * r.rho3_at(t, m, dg, dM));
          }
          Matrix rhs(dV, dW);
          for (int i = 0; i < n; ++i) {
            IndexTuple rest;
            for (int q = 0; q < n; ++q)
              if (q != i) rest.push_back(Y[q]);
            IndexTuple t = X;
            t.push_back(Y[i]);
            int sgn = ((n - (i + 1)) % 2 == 0) ? 1 : -1;
            rhs = rhs + (Rational(sgn) * (r.rho1.rho_idx(rest) * r.rho3_at(t, m, dg, dM)));
          }
          e22.record(detail::flatten(lhs - rhs),
                     {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
        }
    } while (!X.empty() && next_index(X, dg));
  }

  auto& e23 = rep.add("eq23.rho3_rho2");
  {
    IndexTuple X(n - 2, 0);
    do {
      for (const auto& Y : r.rho1.lt.basis)
        for (int m = 0; m < dM; ++m) {
          Matrix lhs = r.rho3_at(X, m, dg, dM) * r.rho2.rho_idx(Y);
          Matrix rhs = r.rho1.rho_idx(Y) * r.rho3_at(X, m, dg, dM);
          for (int i = 0; i < n - 1; ++i) {
            IndexTuple rest;
            for (int q = 0; q < n - 1; ++q)
              if (q != i) rest.push_back(Y[q]);
            IndexTuple t = X;
            t.push_back(Y[i]);
            Vec rm = a.rho.rho_idx(t).apply(unit_vec(dM, m));
            int sgn = ((n - (i + 1)) % 2 == 0) ? 1 : -1;
            for (int mm = 0; mm < dM; ++mm)
              if (!rm[mm].is_zero())
                rhs = rhs + ((Rational(sgn) * rm[mm]) * r.rho3_at(rest, mm, dg, dM));
          }
          e23.record(detail::flatten(lhs - rhs),
                     {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
        }
    } while (!X.empty() && next_index(X, dg));
  }
  return rep;
}

/// Semidirect product of (M,g,f) with (V,W,phi): the LM algebra on
/// (M + V, g + W) with the bracket through rho2, the action through
/// rho, rho1 and rho3, and f^(m+v) = f(m) + phi(v). Rejects invalid inputs.
inline LMAlgebra lm_semidirect(const LMAlgebra& a, const LMRepresentation& r) {
  {
    Report v = validate_lm(a);
    if (!v.pass()) throw ValidationError("lm_semidirect: base fails validate_lm", v);
    Report vr = validate_lm_representation(r, a);
    if (!vr.pass()) throw ValidationError("lm_semidirect: representation invalid", vr);
  }
  const int dg = a.g.dim, dM = a.mdim(), dV = r.vdim, dW = r.wdim;
  NLieAlgebra big = semidirect_product(r.rho2);  // g + W with the rho2 bracket
  big.name = a.name + "|x(V,W)";
  Representation rho(big, dM + dV);
  for (long Xr = 0; Xr < rho.lt.count(); ++Xr) {
    const IndexTuple& T = rho.lt.basis[Xr];
    int nw = 0;
    for (int q : T)
      if (q >= dg) ++nw;
    Matrix& m = rho.rho[Xr];
    if (nw == 0) {
      Matrix r0 = a.rho.rho_idx(T);
      for (int i = 0; i < dM; ++i)
        for (int j = 0; j < dM; ++j) m.at(i, j) = r0.at(i, j);
      Matrix r1 = r.rho1.rho_idx(T);
      for (int i = 0; i < dV; ++i)
        for (int j = 0; j < dV; ++j) m.at(dM + i, dM + j) = r1.at(i, j);
    } else if (nw == 1) {
      // sorted tuple = (x1<..<x_{n-2}, w); the W-entry sits in the last slot,
      // contributing (-1)^{n-(n-1)} rho3(x1..x_{n-2}, m)(w) = -rho3(...)(w)
      IndexTuple gs(T.begin(), T.end() - 1);
      int w = T.back() - dg;
      for (int mi = 0; mi < dM; ++mi) {
        const Matrix& m3 = r.rho3_at(gs, mi, dg, dM);
        for (int vv = 0; vv < dV; ++vv) m.at(dM + vv, mi) = -m3.at(vv, w);
      }
    }
  }
  Matrix fh(dg + dW, dM + dV);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dM; ++j) fh.at(i, j) = a.f.at(i, j);
  for (int i = 0; i < dW; ++i)
    for (int j = 0; j < dV; ++j) fh.at(dg + i, dM + j) = r.phi.at(i, j);
  return LMAlgebra{std::move(big), std::move(rho), std::move(fh), a.name + ".semidirect"};
}

}  // namespace nlal

#endif
