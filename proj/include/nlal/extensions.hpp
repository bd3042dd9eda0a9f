#ifndef NLAL_EXTENSIONS_HPP
#define NLAL_EXTENSIONS_HPP

#include <optional>

#include "nlal/lm_cohomology.hpp"

namespace nlal {

/// Abelian extension of an LM algebra: two exact rows
///   0 -> V -> M^ -> M -> 0,   0 -> W -> g^ -> g -> 0
/// with commuting squares, stored with explicit injection/projection
/// matrices (no block form assumed). The kernel object (V,W,phi) is derived.
struct AbelianExtension {
  LMAlgebra base;   // (M, g, f)
  LMAlgebra total;  // (M^, g^, f^)
  Matrix i0;        // W  -> g^
  Matrix i1;        // V  -> M^
  Matrix p0;        // g^ -> g
  Matrix p1;        // M^ -> M

  int vdim() const { return i1.cols(); }
  int wdim() const { return i0.cols(); }
};

/// Splitting sigma = (sigma0, sigma1) with p0 sigma0 = id, p1 sigma1 = id.
struct Section {
  Matrix sigma0;  // g -> g^
  Matrix sigma1;  // M -> M^
};

namespace detail {

/// Pulls a vector known to lie in the image of an injective matrix back to
/// coordinates; throws if it does not actually lie there.
inline Vec pull_back(const Matrix& inj, const Vec& v, const char* what) {
  auto x = solve(inj, v);
  if (!x) throw std::logic_error(std::string("pull_back: value not in the kernel image (") + what + ")");
  return *x;
}

}  // namespace detail

/// Derived kernel map phi: V -> W, from f^ i1 = i0 phi.
inline Matrix extension_phi(const AbelianExtension& e) {
  auto phi = solve_matrix(e.i0, e.total.f * e.i1);
  if (!phi) throw ShapeError("extension: f^ i1 does not factor through i0");
  return *phi;
}

/// Exactness, commuting squares, morphism property of (p1,p0), abelian-kernel
/// conditions, and validity of base and total.
inline Report validate_extension(const AbelianExtension& e) {
  Report rep;
  rep.subject = e.total.name;
  const int dg = e.base.g.dim, dgh = e.total.g.dim;
  const int dM = e.base.mdim(), dMh = e.total.mdim();
  const int dW = e.wdim(), dV = e.vdim();
  const int n = e.base.g.n;
  if (e.total.g.n != n) throw ShapeError("extension: arity mismatch");
  if (e.i0.rows() != dgh || e.p0.rows() != dg || e.p0.cols() != dgh || e.i1.rows() != dMh ||
      e.p1.rows() != dM || e.p1.cols() != dMh)
    throw ShapeError("extension: matrix shapes");

  rep.absorb(validate_lm(e.base), "base.");
  rep.absorb(validate_lm(e.total), "total.");

  auto& ex = rep.add("rows_exact");
  {
    bool ok = (e.p0 * e.i0).is_zero() && (e.p1 * e.i1).is_zero();
    ok = ok && rank(e.i0) == dW && rank(e.i1) == dV;
    ok = ok && rank(e.p0) == dg && rank(e.p1) == dM;
    ok = ok && dW + dg == dgh && dV + dM == dMh;
    if (ok)
      ex.count_pass();
    else
      ex.count_fail(Witness{{}, {}, "rows are not short exact"});
  }

  auto& sq = rep.add("squares_commute");
  {
    sq.record(detail::flatten(e.base.f * e.p1 - e.p0 * e.total.f), {});
    auto phi = solve_matrix(e.i0, e.total.f * e.i1);
    if (!phi) {
      sq.count_fail(Witness{{}, {}, "f^ i1 does not factor through i0"});
    } else {
      sq.record(detail::flatten(e.i0 * *phi - e.total.f * e.i1), {});
    }
  }

  // (p1, p0) is an LM morphism total -> base
  rep.absorb(validate_lm_morphism(LMMorphism{e.p0, e.p1}, e.total, e.base), "projection.");

  // kernel abelian: brackets with two kernel entries vanish, the kernel acts
  // trivially on the kernel module part, and doubly-kernel tuples act by zero
  auto& ab1 = rep.add("kernel_bracket_trivial");
  auto& ab2 = rep.add("kernel_action_on_V_trivial");
  auto& ab3 = rep.add("kernel_double_action_trivial");
  {
    std::vector<Vec> kg(dW), kv(dV);
    for (int w = 0; w < dW; ++w) kg[w] = e.i0.col(w);
    for (int v = 0; v < dV; ++v) kv[v] = e.i1.col(v);
    // two kernel entries + arbitrary basis entries, skew slots make this exhaustive
    for (int w1 = 0; w1 < dW; ++w1)
      for (int w2 = w1 + 1; w2 < dW; ++w2)
        for (const auto& rest : wedge_basis(dgh, n - 2)) {
          std::vector<Vec> args{kg[w1], kg[w2]};
          for (int q : rest) args.push_back(unit_vec(dgh, q));
          ab1.record(e.total.g.bracket_vecs(args),
                     {{"w", {w1 + 1, w2 + 1}}, {"rest", to_one_based(rest)}});
        }
    for (int w = 0; w < dW; ++w)
      for (const auto& rest : wedge_basis(dgh, n - 2)) {
        std::vector<Vec> args{kg[w]};
        for (int q : rest) args.push_back(unit_vec(dgh, q));
        Matrix m = e.total.rho.rho_vecs(args);
        for (int v = 0; v < dV; ++v)
          ab2.record(m.apply(kv[v]), {{"w", {w + 1}}, {"rest", to_one_based(rest)}, {"v", {v + 1}}});
      }
    if (n >= 3)
      for (int w1 = 0; w1 < dW; ++w1)
        for (int w2 = w1 + 1; w2 < dW; ++w2)
          for (const auto& rest : wedge_basis(dgh, n - 3)) {
            std::vector<Vec> args{kg[w1], kg[w2]};
            for (int q : rest) args.push_back(unit_vec(dgh, q));
            Matrix m = e.total.rho.rho_vecs(args);
            for (int mh = 0; mh < dMh; ++mh)
              ab3.record(m.apply(unit_vec(dMh, mh)),
                         {{"w", {w1 + 1, w2 + 1}}, {"rest", to_one_based(rest)}, {"m", {mh + 1}}});
          }
    if (ab3.instances == 0) ab3.count_pass();  // vacuous for n = 2 or dW < 2
    if (ab2.instances == 0) ab2.count_pass();
    if (ab1.instances == 0) ab1.count_pass();
  }
  return rep;
}

/// A deterministic section: each sigma column is the first-pivot solution of
/// p sigma = id.
inline Section canonical_section(const AbelianExtension& e) {
  auto s0 = solve_matrix(e.p0, Matrix::identity(e.base.g.dim));
  auto s1 = solve_matrix(e.p1, Matrix::identity(e.base.mdim()));
  if (!s0 || !s1) throw ShapeError("canonical_section: projections are not surjective");
  return Section{*s0, *s1};
}

/// The representation of the base on the kernel object induced by a section:
///   rho1(X)(v) = rho^(sigma0 X)(v),  rho2(X)(w) = [sigma0 X, w],
///   rho3(x1..x_{n-2}, m)(w) = -rho^(sigma0 x.., w)(sigma1 m);
/// independent of the section. Rejects non-exact or non-abelian input.
inline LMRepresentation rep_from_extension(const AbelianExtension& e, const Section& s) {
  {
    Report v = validate_extension(e);
    if (!v.pass()) throw ValidationError("rep_from_extension: invalid extension", v);
  }
  const int dg = e.base.g.dim, dM = e.base.mdim(), dW = e.wdim(), dV = e.vdim(), n = e.base.g.n;
  LMRepresentation r;
  r.vdim = dV;
  r.wdim = dW;
  r.phi = extension_phi(e);
  r.rho1 = Representation(e.base.g, dV);
  r.rho2 = Representation(e.base.g, dW);
  std::size_t cnt = 1;
  for (int i = 0; i < n - 2; ++i) cnt *= static_cast<std::size_t>(dg);
  r.rho3.assign(cnt * dM, Matrix(dV, dW));

  std::vector<Vec> sg(dg), sm(dM), kg(dW), kv(dV);
  for (int j = 0; j < dg; ++j) sg[j] = s.sigma0.col(j);
  for (int j = 0; j < dM; ++j) sm[j] = s.sigma1.col(j);
  for (int w = 0; w < dW; ++w) kg[w] = e.i0.col(w);
  for (int v = 0; v < dV; ++v) kv[v] = e.i1.col(v);

  for (long Xr = 0; Xr < r.rho1.lt.count(); ++Xr) {
    const IndexTuple& X = r.rho1.lt.basis[Xr];
    std::vector<Vec> lift(n - 1);
    for (int q = 0; q < n - 1; ++q) lift[q] = sg[X[q]];
    Matrix act = e.total.rho.rho_vecs(lift);
    for (int v = 0; v < dV; ++v) {
      Vec img = detail::pull_back(e.i1, act.apply(kv[v]), "rho1");
      for (int vv = 0; vv < dV; ++vv) r.rho1.rho[Xr].at(vv, v) = img[vv];
    }
    for (int w = 0; w < dW; ++w) {
      std::vector<Vec> args = lift;
      args.push_back(kg[w]);
      Vec img = detail::pull_back(e.i0, e.total.g.bracket_vecs(args), "rho2");
      for (int ww = 0; ww < dW; ++ww) r.rho2.rho[Xr].at(ww, w) = img[ww];
    }
  }
  IndexTuple gt(n - 2, 0);
  do {
    for (int m = 0; m < dM; ++m) {
      Matrix& mat = r.rho3_at(gt, m, dg, dM);
      for (int w = 0; w < dW; ++w) {
        std::vector<Vec> args;
        for (int q : gt) args.push_back(sg[q]);
        args.push_back(kg[w]);
        Vec img = detail::pull_back(e.i1, e.total.rho.rho_vecs(args).apply(sm[m]), "rho3");
        for (int v = 0; v < dV; ++v) mat.at(v, w) = -img[v];
      }
    }
  } while (!gt.empty() && next_index(gt, dg));
  return r;
}

/// The 2-cocycle of a section:
///   theta(m)    = f^ sigma1(m) - sigma0 f(m)
///   omega(x..z) = [sigma0 x..]^ - sigma0 [x..]
///   nu(X, m)    = rho^(sigma0 X)(sigma1 m) - sigma1 rho(X)(m).
inline LMCochain cocycle_from_extension(const AbelianExtension& e, const Section& s) {
  {
    Report v = validate_extension(e);
    if (!v.pass()) throw ValidationError("cocycle_from_extension: invalid extension", v);
  }
  const int dg = e.base.g.dim, dM = e.base.mdim(), n = e.base.g.n;
  LMRepresentation shape = rep_from_extension(e, s);
  LMCochain c(e.base, shape, 2);
  std::vector<Vec> sg(dg), sm(dM);
  for (int j = 0; j < dg; ++j) sg[j] = s.sigma0.col(j);
  for (int j = 0; j < dM; ++j) sm[j] = s.sigma1.col(j);
  WedgeTable lt(dg, n - 1);
  for (long Jr = 0; Jr < lt.count(); ++Jr) {
    const IndexTuple& J = lt.basis[Jr];
    std::vector<Vec> lift(n - 1);
    for (int q = 0; q < n - 1; ++q) lift[q] = sg[J[q]];
    for (int z = 0; z < dg; ++z) {
      std::vector<Vec> args = lift;
      args.push_back(sg[z]);
      IndexTuple full = J;
      full.push_back(z);
      Vec val = e.total.g.bracket_vecs(args) - s.sigma0.apply(e.base.g.bracket_idx(full));
      Vec w = detail::pull_back(e.i0, val, "omega");
      std::array<long, 1> ranks{Jr};
      std::array<int, 1> slots{z};
      for (int k = 0; k < e.wdim(); ++k) c.omega.value_at(c.omega.position(ranks, slots))[k] = w[k];
    }
    Matrix act = e.total.rho.rho_vecs(lift);
    for (int m = 0; m < dM; ++m) {
      Vec val = act.apply(sm[m]) - s.sigma1.apply(e.base.rho.rho_idx(J).apply(unit_vec(dM, m)));
      Vec v = detail::pull_back(e.i1, val, "nu");
      std::array<long, 1> ranks{Jr};
      std::array<int, 1> slots{m};
      for (int k = 0; k < e.vdim(); ++k) c.nu.value_at(c.nu.position(ranks, slots))[k] = v[k];
    }
  }
  for (int m = 0; m < dM; ++m) {
    Vec val = e.total.f.apply(sm[m]) - s.sigma0.apply(e.base.f.col(m));
    Vec w = detail::pull_back(e.i0, val, "theta");
    for (int k = 0; k < e.wdim(); ++k) c.theta.value_at(m)[k] = w[k];
  }
  return c;
}

/// Builds the extension of (M,g,f) by (V,W,phi) attached to a 2-cocycle:
/// the semidirect structure twisted by (omega, nu, theta), with the canonical
/// injections and projections as the section-free normal form. Rejects
/// non-cocycles.
inline AbelianExtension extension_from_cocycle(const LMAlgebra& a, const LMRepresentation& r,
                                               const LMCochain& c) {
  {
    Report v = is_lm_two_cocycle(a, r, c);
    if (!v.pass()) throw ValidationError("extension_from_cocycle: not a 2-cocycle", v);
  }
  const int dg = a.g.dim, dM = a.mdim(), dV = r.vdim, dW = r.wdim, n = a.g.n;
  LMAlgebra total = lm_semidirect(a, r);
  total.name = a.name + ".extension";
  // twist the bracket by omega on the pure-g entries
  for (const auto& t : wedge_basis(dg + dW, n)) {
    bool pure_g = true;
    for (int q : t)
      if (q >= dg) pure_g = false;
    if (!pure_g) continue;
    IndexTuple block(t.begin(), t.end() - 1);
    std::array<IndexTuple, 1> b{block};
    std::array<int, 1> s{t.back()};
    Vec w = c.omega.eval(b, s);
    long rk = total.g.bracket.table().rank(t);
    Vec val(total.g.dim);
    auto cur = total.g.bracket.value(rk);
    for (int k = 0; k < total.g.dim; ++k) val[k] = cur[k];
    for (int k = 0; k < dW; ++k) val[dg + k] += w[k];
    total.g.bracket.set_value(rk, val);
  }
  total.rho.algebra = total.g;  // the omega twist must reach the action's algebra copy
  // twist the action by nu on pure-g tuples applied to M
  for (long Xr = 0; Xr < total.rho.lt.count(); ++Xr) {
    const IndexTuple& T = total.rho.lt.basis[Xr];
    bool pure_g = true;
    for (int q : T)
      if (q >= dg) pure_g = false;
    if (!pure_g) continue;
    std::array<IndexTuple, 1> b{T};
    for (int m = 0; m < dM; ++m) {
      std::array<int, 1> s{m};
      Vec v = c.nu.eval(b, s);
      for (int k = 0; k < dV; ++k) total.rho.rho[Xr].at(dM + k, m) += v[k];
    }
  }
  // twist f^ by theta on M
  for (int m = 0; m < dM; ++m) {
    auto th = c.theta.value_at(m);
    for (int k = 0; k < dW; ++k) total.f.at(dg + k, m) += th[k];
  }
  AbelianExtension e;
  e.base = a;
  e.total = std::move(total);
  e.i0 = Matrix(dg + dW, dW);
  for (int k = 0; k < dW; ++k) e.i0.at(dg + k, k) = Rational(1);
  e.i1 = Matrix(dM + dV, dV);
  for (int k = 0; k < dV; ++k) e.i1.at(dM + k, k) = Rational(1);
  e.p0 = Matrix(dg, dg + dW);
  for (int k = 0; k < dg; ++k) e.p0.at(k, k) = Rational(1);
  e.p1 = Matrix(dM, dM + dV);
  for (int k = 0; k < dM; ++k) e.p1.at(k, k) = Rational(1);
  return e;
}

struct EquivalenceWitness {
  Matrix F0, F1;  // total -> total'
  Matrix b0, b1;  // the 1-cochain solving the coboundary equation
  Report verification;
};

namespace detail {

inline bool lm_equal(const LMAlgebra& x, const LMAlgebra& y) {
  return x.g.n == y.g.n && x.g.dim == y.g.dim && x.mdim() == y.mdim() &&
         x.g.bracket == y.g.bracket && x.rho.rho == y.rho.rho && x.f == y.f;
}

}  // namespace detail

/// Decides equivalence of two abelian extensions of the same (base, kernel):
/// extracts cocycles with canonical sections and solves the linear system
/// (difference) = D1(b0, b1). On success returns the verified equivalence
/// F0(x+w) = x + b0 x + w, F1(m+v) = m + b1 m + v transported to the stored
/// coordinates; when no solution exists the cohomology classes are distinct
/// and no equivalence can exist.
inline std::optional<EquivalenceWitness> extension_equivalence(const AbelianExtension& e1,
                                                               const AbelianExtension& e2) {
  if (!detail::lm_equal(e1.base, e2.base)) throw ShapeError("extension_equivalence: base mismatch");
  if (e1.vdim() != e2.vdim() || e1.wdim() != e2.wdim())
    throw ShapeError("extension_equivalence: kernel dimension mismatch");
  Section s1 = canonical_section(e1);
  Section s2 = canonical_section(e2);
  LMRepresentation r1 = rep_from_extension(e1, s1);
  LMRepresentation r2 = rep_from_extension(e2, s2);
  if (!(r1.phi == r2.phi) || !(r1.rho1.rho == r2.rho1.rho) || !(r1.rho2.rho == r2.rho2.rho) ||
      !(r1.rho3 == r2.rho3))
    return std::nullopt;  // different induced representations: never equivalent
  LMCochain c1 = cocycle_from_extension(e1, s1);
  LMCochain c2 = cocycle_from_extension(e2, s2);
  const auto& a = e1.base;
  Vec diff = lm_cochain_coords(a, r1, c1);
  Vec other = lm_cochain_coords(a, r1, c2);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other[i];
  Matrix D1 = lm_coboundary_matrix(a, r1, 1);
  auto b = solve(D1, diff);
  if (!b) return std::nullopt;

  const int dg = a.g.dim, dM = a.mdim(), dW = e1.wdim(), dV = e1.vdim();
  Matrix b0(dW, dg), b1(dV, dM);
  {
    long pos = 0;
    for (int z = 0; z < dg; ++z)
      for (int w = 0; w < dW; ++w) b0.at(w, z) = (*b)[pos++];
    for (int m = 0; m < dM; ++m)
      for (int v = 0; v < dV; ++v) b1.at(v, m) = (*b)[pos++];
  }
  // F in stored coordinates: F0 = sigma'0 p0 + i'0 (b0 p0 + kappa0), where
  // kappa0 reads off the kernel component of the first extension.
  auto kappa = [&](const Matrix& inj, const Matrix& sig, const Matrix& proj) {
    Matrix rest = Matrix::identity(inj.rows()) - sig * proj;
    auto k = solve_matrix(inj, rest);
    if (!k) throw std::logic_error("extension_equivalence: kernel component extraction failed");
    return *k;
  };
  Matrix k0 = kappa(e1.i0, s1.sigma0, e1.p0);
  Matrix k1 = kappa(e1.i1, s1.sigma1, e1.p1);
  EquivalenceWitness w;
  // note the cocycle difference solves c1 - c2 = D1(b); F carries e1 to e2
  // with the sign conventions below, verified exhaustively afterwards
  w.b0 = b0;
  w.b1 = b1;
  w.F0 = s2.sigma0 * e1.p0 + e2.i0 * (b0 * e1.p0 + k0);
  w.F1 = s2.sigma1 * e1.p1 + e2.i1 * (b1 * e1.p1 + k1);
  Report& rep = w.verification;
  rep.subject = "equivalence witness";
  rep.absorb(validate_lm_morphism(LMMorphism{w.F0, w.F1}, e1.total, e2.total), "F.");
  auto& diag = rep.add("diagram");
  diag.record(detail::flatten(w.F0 * e1.i0 - e2.i0), {});
  diag.record(detail::flatten(w.F1 * e1.i1 - e2.i1), {});
  diag.record(detail::flatten(e2.p0 * w.F0 - e1.p0), {});
  diag.record(detail::flatten(e2.p1 * w.F1 - e1.p1), {});
  if (!rep.pass()) throw std::logic_error("extension_equivalence: witness failed verification");
  return w;
}

}  // namespace nlal

#endif
