#ifndef NLAL_REPRESENTATION_HPP
#define NLAL_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "nlal/leibniz.hpp"
#include "nlal/nlie.hpp"

namespace nlal {

/// Representation of an n-Lie algebra: rho(x1,..,x_{n-1}) as a square matrix
/// on the module, skew in the g-arguments by storage. (R1)/(R2) are checked
/// by validate_representation.
struct Representation {
  NLieAlgebra algebra;
  int module_dim = 0;
  std::vector<Matrix> rho;  // indexed by the wedge_basis(dim, n-1) rank
  WedgeTable lt;

  Representation() = default;
  Representation(NLieAlgebra a, int md)
      : algebra(std::move(a)), module_dim(md), lt(algebra.dim, algebra.n - 1) {
    rho.assign(lt.count(), Matrix(md, md));
  }

  const Matrix& rho_rank(long r) const { return rho[r]; }

  /// rho at an arbitrary-order index tuple (sign-normalized).
  Matrix rho_idx(const IndexTuple& t) const {
    auto [sign, sorted] = normalize_wedge(t);
    if (sign == 0) return Matrix(module_dim, module_dim);
    return sign == 1 ? rho[lt.rank(sorted)] : Rational(-1) * rho[lt.rank(sorted)];
  }

  /// Multilinear extension to general g-vectors.
  Matrix rho_vecs(std::span<const Vec> args) const {
    Matrix out(module_dim, module_dim);
    auto sup = detail::supports(args);
    std::vector<int> radix(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (sup[i].empty()) return out;
      radix[i] = static_cast<int>(sup[i].size());
    }
    std::vector<int> pick(args.size(), 0);
    IndexTuple t(args.size());
    do {
      Rational c(1);
      for (std::size_t i = 0; i < args.size(); ++i) {
        t[i] = sup[i][pick[i]];
        c *= args[i][t[i]];
      }
      auto [sign, sorted] = normalize_wedge(t);
      if (sign == 0) continue;
      out = out + ((c * Rational(sign)) * rho[lt.rank(sorted)]);
    } while (next_index(pick, radix));
    return out;
  }
};

inline Representation trivial_representation(NLieAlgebra a, int module_dim) {
  return Representation(std::move(a), module_dim);
}

/// ad(x1,..,x_{n-1}) y = [x1,..,x_{n-1},y].
inline Representation adjoint_representation(const NLieAlgebra& a) {
  Representation r(a, a.dim);
  for (long i = 0; i < r.lt.count(); ++i) r.rho[i] = ad_matrix(a, r.lt.basis[i]);
  return r;
}

enum class RepMode { weak, full };

/// mode weak: (R1) in the bracketed form of the remark; mode full: (R1) and
/// (R2). Exhaustive over increasing basis tuples (the slots are skew).
inline Report validate_representation(const Representation& r, RepMode mode = RepMode::full) {
  const auto& a = r.algebra;
  Report rep;
  rep.subject = a.name;
  auto& r1 = rep.add("R1");
  const auto& wb = r.lt.basis;
  for (std::size_t xi = 0; xi < wb.size(); ++xi)
    for (std::size_t yi = 0; yi < wb.size(); ++yi) {
      const IndexTuple& X = wb[xi];
      const IndexTuple& Y = wb[yi];
      // rho(X)rho(Y) - rho(Y)rho(X) - sum_i rho(y1,..,[X,y_i],..,y_{n-1})
      Matrix res = r.rho[xi] * r.rho[yi] - r.rho[yi] * r.rho[xi];
      for (int s = 0; s < a.n - 1; ++s) {
        IndexTuple t = X;
        t.push_back(Y[s]);
        Vec w = a.bracket_idx(t);
        for (int l = 0; l < a.dim; ++l) {
          if (w[l].is_zero()) continue;
          IndexTuple yy = Y;
          yy[s] = l;
          res = res - (w[l] * r.rho_idx(yy));
        }
      }
      r1.record(detail::flatten(res), {{"x", to_one_based(X)}, {"y", to_one_based(Y)}});
    }
  if (mode == RepMode::weak) return rep;

  auto& r2 = rep.add("R2");
  auto xs = wedge_basis(a.dim, a.n - 2);
  auto ys = wedge_basis(a.dim, a.n);
  for (const auto& X : xs)
    for (const auto& Y : ys) {
      Vec br = a.bracket_idx(Y);
      Matrix lhs(r.module_dim, r.module_dim);
      for (int l = 0; l < a.dim; ++l) {
        if (br[l].is_zero()) continue;
        IndexTuple t = X;
        t.push_back(l);
        lhs = lhs + (br[l] * r.rho_idx(t));
      }
      Matrix rhs(r.module_dim, r.module_dim);
      for (int i = 0; i < a.n; ++i) {
        IndexTuple rest;
        for (int q = 0; q < a.n; ++q)
          if (q != i) rest.push_back(Y[q]);
        IndexTuple t = X;
        t.push_back(Y[i]);
        int sgn = ((a.n - (i + 1)) % 2 == 0) ? 1 : -1;
        rhs = rhs + (Rational(sgn) * (r.rho_idx(rest) * r.rho_idx(t)));
      }
      r2.record(detail::flatten(lhs - rhs), {{"x", to_one_based(X)}, {"y", to_one_based(Y)}});
    }
  return rep;
}

/// Semidirect product g |x V: skew n-bracket
/// [x1+u1,..,xn+un] = [x1..xn] + sum_i (-1)^{n-i} rho(x1,..,^x_i,..,xn)(u_i).
/// Rejects representations failing (R1)/(R2).
inline NLieAlgebra semidirect_product(const Representation& r) {
  Report v = validate_representation(r, RepMode::full);
  if (!v.pass()) throw ValidationError("semidirect_product: not a representation", v);
  const auto& a = r.algebra;
  int dg = a.dim, dm = r.module_dim;
  NLieAlgebra out(a.n, dg + dm, a.name + "|xV");
  for (const auto& t : wedge_basis(dg + dm, a.n)) {
    int nv = 0;
    for (int q : t)
      if (q >= dg) ++nv;
    Vec val(dg + dm, Rational(0));
    if (nv == 0) {
      Vec b = a.bracket_idx(t);
      for (int k = 0; k < dg; ++k) val[k] = b[k];
    } else if (nv == 1) {
      // sorted tuple puts the module element last: (x1<..<x_{n-1}, u)
      IndexTuple gs(t.begin(), t.end() - 1);
      int u = t.back() - dg;
      Matrix m = r.rho_idx(gs);
      for (int k = 0; k < dm; ++k) val[dg + k] = m.at(k, u);
    }
    out.bracket.set_value(out.bracket.table().rank(t), val);
  }
  return out;
}

/// Hemisemidirect product g |x_H V: Leibniz n-bracket
/// [x1+u1,..,xn+un]_H = [x1..xn] + rho(x1,..,x_{n-1})(u_n).
inline LeibnizNAlgebra hemisemidirect_product(const Representation& r) {
  Report v = validate_representation(r, RepMode::full);
  if (!v.pass()) throw ValidationError("hemisemidirect_product: not a representation", v);
  const auto& a = r.algebra;
  int dg = a.dim, dm = r.module_dim;
  LeibnizNAlgebra out(a.n, dg + dm, a.name + "|xHV");
  IndexTuple t(a.n, 0);
  do {
    auto val = out.at(t);
    bool head_in_g = true;
    for (int q = 0; q + 1 < a.n; ++q)
      if (t[q] >= dg) head_in_g = false;
    if (head_in_g) {
      if (t.back() < dg) {
        Vec b = a.bracket_idx(t);
        for (int k = 0; k < dg; ++k) val[k] = b[k];
      } else {
        IndexTuple gs(t.begin(), t.end() - 1);
        Matrix m = r.rho_idx(gs);
        int u = t.back() - dg;
        for (int k = 0; k < dm; ++k) val[dg + k] = m.at(k, u);
      }
    }
  } while (next_index(t, dg + dm));
  return out;
}

/// Leibniz module structure of L = wedge^{n-1} g on Hom(g,V):
///   [X,phi]_L(z)  = rho(X)phi(z) - phi([X,z]),
///   [phi,X]_R(z)  = phi([x1..x_{n-1},z]) - sum_i (-1)^{n-i} rho(..^i..)phi(arg_i).
/// Module elements are module_dim x dim matrices flattened row-major
/// (index = v*dim + z). Applies to invalid constants too; the equivalence
/// with (R1)/(R2) is exactly what the module axioms then detect.
inline LeibnizModule hom_module(const Representation& r) {
  const auto& a = r.algebra;
  int dg = a.dim, dm = r.module_dim;
  int hd = dm * dg;
  LeibnizModule M(static_cast<int>(r.lt.count()), hd);
  for (long Xr = 0; Xr < r.lt.count(); ++Xr) {
    const IndexTuple& X = r.lt.basis[Xr];
    Matrix& L = M.left[Xr];
    Matrix& R = M.right[Xr];
    for (int z = 0; z < dg; ++z)
      for (int v = 0; v < dm; ++v) {
        int col = v * dg + z;  // phi = E_{v,z}
        // left: rho(X) E_{v,z} (z') - E_{v,z}([X,z'])
        for (int av = 0; av < dm; ++av)
          if (!r.rho[Xr].at(av, v).is_zero()) L.at(av * dg + z, col) += r.rho[Xr].at(av, v);
        {
          IndexTuple t = X;
          t.push_back(0);
          for (int zz = 0; zz < dg; ++zz) {
            t.back() = zz;
            Vec b = a.bracket_idx(t);
            if (!b[z].is_zero()) L.at(v * dg + zz, col) -= b[z];
          }
        }
        // right: phi([x1..x_{n-1},z']) - sum_i (-1)^{n-i} rho(minus i) phi(arg_i)
        {
          IndexTuple t = X;
          t.push_back(0);
          for (int zz = 0; zz < dg; ++zz) {
            t.back() = zz;
            Vec b = a.bracket_idx(t);
            if (!b[z].is_zero()) R.at(v * dg + zz, col) += b[z];
            for (int i = 0; i < a.n; ++i) {
              if (t[i] != z) continue;  // phi(arg_i) nonzero only at arg_i = z
              IndexTuple rest;
              for (int q = 0; q < a.n; ++q)
                if (q != i) rest.push_back(t[q]);
              Matrix m = r.rho_idx(rest);
              int sgn = ((a.n - (i + 1)) % 2 == 0) ? 1 : -1;
              for (int av = 0; av < dm; ++av)
                if (!m.at(av, v).is_zero()) R.at(av * dg + zz, col) -= Rational(sgn) * m.at(av, v);
            }
          }
        }
      }
  }
  return M;
}

}  // namespace nlal

#endif
