#ifndef NLAL_DEFORMATIONS_HPP
#define NLAL_DEFORMATIONS_HPP

#include <array>
#include <vector>

#include "nlal/extensions.hpp"

namespace nlal {

/// First-order deformation data of a 3-Lie algebra in LM:
/// theta: M -> g, omega: wedge^3 g -> g, nu: wedge^2 g (x) M -> M.
struct DeformationTriple {
  Matrix theta;
  SkewTensor omega;
  BlockCochain nu;

  DeformationTriple() = default;
  explicit DeformationTriple(const LMAlgebra& a)
      : theta(a.g.dim, a.mdim()), omega(a.g.dim, 3, a.g.dim),
        nu(a.g.dim, 1, 2, {a.mdim()}, a.mdim()) {}
};

/// Pair of linear maps (N0: g -> g, N1: M -> M); Nijenhuis when the three
/// conditions of the definition hold.
struct NijenhuisPair {
  Matrix N0, N1;
};

/// lambda-family of order K: f + sum lambda^i theta_i, bracket + sum
/// lambda^i omega_i, action + sum lambda^i nu_i.
struct FormalDeformation {
  int order = 0;
  std::vector<Matrix> theta;
  std::vector<SkewTensor> omega;
  std::vector<BlockCochain> nu;
};

namespace detail {

inline void require_arity3(const LMAlgebra& a, const char* what) {
  if (a.g.n != 3) throw ShapeError(std::string(what) + ": requires a 3-Lie algebra in LM");
}

/// Evaluators for the deformed/base structure maps on vectors.
struct Tri {
  const LMAlgebra* a;
  const Matrix* theta = nullptr;
  const SkewTensor* omega = nullptr;
  const BlockCochain* nu = nullptr;

  Vec om(const Vec& x, const Vec& y, const Vec& z) const {
    std::array<Vec, 3> args{x, y, z};
    return omega ? omega->eval_vecs(args) : Vec(a->g.dim, Rational(0));
  }
  Vec nuv(const Vec& x, const Vec& y, const Vec& m) const {
    std::array<Vec, 2> b{x, y};
    std::array<Vec, 1> s{m};
    return nu ? nu->eval_vecs(b, s) : Vec(a->mdim(), Rational(0));
  }
  Vec br(const Vec& x, const Vec& y, const Vec& z) const {
    std::array<Vec, 3> args{x, y, z};
    return a->g.bracket_vecs(args);
  }
  Vec act(const Vec& x, const Vec& y, const Vec& m) const {
    std::array<Vec, 2> args{x, y};
    return a->rho.rho_vecs(args).apply(m);
  }
};

}  // namespace detail

/// The six lambda-coefficient equations of a one-parameter deformation:
/// (i) the lambda^1 layer = (theta,omega,nu) is a 2-cocycle in the
/// adjoint representation; (ii) the lambda^2 layer = omega satisfies the
/// fundamental identity by itself, nu is omega-compatible, and
/// theta nu(x1,x2,m) = omega(x1,x2,theta m). Reported separately.
inline Report validate_infinitesimal_deformation(const LMAlgebra& a, const DeformationTriple& d) {
  detail::require_arity3(a, "validate_infinitesimal_deformation");
  const int dg = a.g.dim, dM = a.mdim();
  Report rep;
  rep.subject = a.name + " deformation";
  detail::Tri T{&a, &d.theta, &d.omega, &d.nu};
  auto eg = [&](int i) { return unit_vec(dg, i); };
  auto em = [&](int i) { return unit_vec(dM, i); };

  auto& c1 = rep.add("(i).theta_cocycle");
  for (const auto& X : wedge_basis(dg, 2))
    for (int m = 0; m < dM; ++m) {
      Vec lhs = d.theta.apply(T.act(eg(X[0]), eg(X[1]), em(m))) + a.f.apply(T.nuv(eg(X[0]), eg(X[1]), em(m)));
      Vec rhs = T.om(eg(X[0]), eg(X[1]), a.f.col(m)) + T.br(eg(X[0]), eg(X[1]), d.theta.col(m));
      c1.record(lhs - rhs, {{"x", to_one_based(X)}, {"m", {m + 1}}});
    }

  auto& c3 = rep.add("(i).omega_cocycle");
  for (const auto& X : wedge_basis(dg, 2))
    for (const auto& Y : wedge_basis(dg, 3)) {
      Vec x1 = eg(X[0]), x2 = eg(X[1]);
      std::array<Vec, 3> ys{eg(Y[0]), eg(Y[1]), eg(Y[2])};
      Vec lhs = T.om(x1, x2, T.br(ys[0], ys[1], ys[2])) + T.br(x1, x2, T.om(ys[0], ys[1], ys[2]));
      Vec rhs(dg, Rational(0));
      for (int i = 0; i < 3; ++i) {
        std::array<Vec, 3> yy = ys;
        yy[i] = T.br(x1, x2, ys[i]);
        axpy(rhs, Rational(1), T.om(yy[0], yy[1], yy[2]));
        yy = ys;
        yy[i] = T.om(x1, x2, ys[i]);
        axpy(rhs, Rational(1), T.br(yy[0], yy[1], yy[2]));
      }
      c3.record(lhs - rhs, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}});
    }

  auto& c5 = rep.add("(i).nu_cocycle");
  for (const auto& X : wedge_basis(dg, 2))
    for (const auto& Y : wedge_basis(dg, 2))
      for (int m = 0; m < dM; ++m) {
        Vec x1 = eg(X[0]), x2 = eg(X[1]), y1 = eg(Y[0]), y2 = eg(Y[1]), mm = em(m);
        Vec lhs = T.nuv(x1, x2, T.act(y1, y2, mm)) + T.act(x1, x2, T.nuv(y1, y2, mm));
        Vec rhs = T.nuv(T.br(x1, x2, y1), y2, mm) + T.nuv(y1, T.br(x1, x2, y2), mm) +
                  T.nuv(y1, y2, T.act(x1, x2, mm)) + T.act(T.om(x1, x2, y1), y2, mm) +
                  T.act(y1, T.om(x1, x2, y2), mm) + T.act(y1, y2, T.nuv(x1, x2, mm));
        c5.record(lhs - rhs, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
      }

  auto& c2 = rep.add("(ii).theta_nu_vs_omega_theta");
  for (const auto& X : wedge_basis(dg, 2))
    for (int m = 0; m < dM; ++m) {
      Vec lhs = d.theta.apply(T.nuv(eg(X[0]), eg(X[1]), em(m)));
      Vec rhs = T.om(eg(X[0]), eg(X[1]), d.theta.col(m));
      c2.record(lhs - rhs, {{"x", to_one_based(X)}, {"m", {m + 1}}});
    }

  auto& c4 = rep.add("(ii).omega_fundamental_identity");
  for (const auto& X : wedge_basis(dg, 2))
    for (const auto& Y : wedge_basis(dg, 3)) {
      Vec x1 = eg(X[0]), x2 = eg(X[1]);
      std::array<Vec, 3> ys{eg(Y[0]), eg(Y[1]), eg(Y[2])};
      Vec lhs = T.om(x1, x2, T.om(ys[0], ys[1], ys[2]));
      Vec rhs(dg, Rational(0));
      for (int i = 0; i < 3; ++i) {
        std::array<Vec, 3> yy = ys;
        yy[i] = T.om(x1, x2, ys[i]);
        axpy(rhs, Rational(1), T.om(yy[0], yy[1], yy[2]));
      }
      c4.record(lhs - rhs, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}});
    }

  auto& c6 = rep.add("(ii).nu_omega_compatibility");
  for (const auto& X : wedge_basis(dg, 2))
    for (const auto& Y : wedge_basis(dg, 2))
      for (int m = 0; m < dM; ++m) {
        Vec x1 = eg(X[0]), x2 = eg(X[1]), y1 = eg(Y[0]), y2 = eg(Y[1]), mm = em(m);
        Vec lhs = T.nuv(x1, x2, T.nuv(y1, y2, mm));
        Vec rhs = T.nuv(T.om(x1, x2, y1), y2, mm) + T.nuv(y1, T.om(x1, x2, y2), mm) +
                  T.nuv(y1, y2, T.nuv(x1, x2, mm));
        c6.record(lhs - rhs, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
      }
  return rep;
}

/// The lambda-specialized structure (f + lambda theta, [.] + lambda omega,
/// rho + lambda nu) as an LMAlgebra value.
inline LMAlgebra deformed_structures(const LMAlgebra& a, const DeformationTriple& d,
                                     const Rational& lambda) {
  detail::require_arity3(a, "deformed_structures");
  LMAlgebra out = a;
  out.name = a.name + ".deformed";
  out.g.bracket.axpy(lambda, d.omega);
  out.rho.algebra = out.g;  // keep the representation's algebra copy in sync
  for (long Xr = 0; Xr < out.rho.lt.count(); ++Xr) {
    const IndexTuple& X = out.rho.lt.basis[Xr];
    std::array<long, 1> ranks{Xr};
    (void)X;
    for (int m = 0; m < a.mdim(); ++m) {
      std::array<int, 1> s{m};
      auto v = d.nu.value_at(d.nu.position(ranks, s));
      for (int k = 0; k < a.mdim(); ++k) out.rho.rho[Xr].at(k, m) += lambda * v[k];
    }
  }
  out.f = out.f + (lambda * d.theta);
  return out;
}

/// The three conditions of the Nijenhuis definition:
///   N0 (f N1 - N0 f) = 0,
///   [N0 x1, N0 x2, N0 x3] = N0(two-N terms) - N0^2(one-N terms) + N0^3 [x],
///   and the module analogue with N1.
inline Report is_nijenhuis(const LMAlgebra& a, const NijenhuisPair& p) {
  detail::require_arity3(a, "is_nijenhuis");
  const int dg = a.g.dim, dM = a.mdim();
  if (p.N0.rows() != dg || p.N0.cols() != dg || p.N1.rows() != dM || p.N1.cols() != dM)
    throw ShapeError("is_nijenhuis: N0 must be g x g and N1 M x M");
  Report rep;
  rep.subject = a.name + " Nijenhuis";
  detail::Tri T{&a};
  auto& c0 = rep.add("N0_theta_annihilation");
  c0.record(detail::flatten(p.N0 * (a.f * p.N1 - p.N0 * a.f)), {});

  Matrix N0sq = p.N0 * p.N0, N0cu = p.N0 * p.N0 * p.N0;
  Matrix N1sq = p.N1 * p.N1, N1cu = p.N1 * p.N1 * p.N1;
  auto& cb = rep.add("bracket_condition");
  for (const auto& X : wedge_basis(dg, 3)) {
    Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), x3 = unit_vec(dg, X[2]);
    Vec n1 = p.N0.apply(x1), n2 = p.N0.apply(x2), n3 = p.N0.apply(x3);
    Vec lhs = T.br(n1, n2, n3);
    Vec two = T.br(n1, n2, x3) + T.br(n1, x2, n3) + T.br(x1, n2, n3);
    Vec one = T.br(n1, x2, x3) + T.br(x1, n2, x3) + T.br(x1, x2, n3);
    Vec rhs = p.N0.apply(two) - N0sq.apply(one) + N0cu.apply(T.br(x1, x2, x3));
    cb.record(lhs - rhs, {{"x", to_one_based(X)}});
  }
  auto& cm = rep.add("module_condition");
  for (const auto& X : wedge_basis(dg, 2))
    for (int m = 0; m < dM; ++m) {
      Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), mm = unit_vec(dM, m);
      Vec n1 = p.N0.apply(x1), n2 = p.N0.apply(x2), nm = p.N1.apply(mm);
      Vec lhs = T.act(n1, n2, nm);
      Vec two = T.act(n1, n2, mm) + T.act(n1, x2, nm) + T.act(x1, n2, nm);
      Vec one = T.act(n1, x2, mm) + T.act(x1, n2, mm) + T.act(x1, x2, nm);
      Vec rhs = p.N1.apply(two) - N1sq.apply(one) + N1cu.apply(T.act(x1, x2, mm));
      cm.record(lhs - rhs, {{"x", to_one_based(X)}, {"m", {m + 1}}});
    }
  return rep;
}

/// The second-order deformation generated by a Nijenhuis pair:
///   theta = f N1 - N0 f,
///   omega1 = one-N0 insertions - N0 [.], omega2 = two-N0 insertions - N0 omega1,
///   nu1, nu2 the module analogues with N1.
/// The omega2 correction term is N0 omega1 (an N1 omega1 variant does not
/// verify). Rejects pairs failing is_nijenhuis.
inline FormalDeformation deformation_from_nijenhuis(const LMAlgebra& a, const NijenhuisPair& p) {
  {
    Report v = is_nijenhuis(a, p);
    if (!v.pass()) throw ValidationError("deformation_from_nijenhuis: pair is not Nijenhuis", v);
  }
  const int dg = a.g.dim, dM = a.mdim();
  detail::Tri T{&a};
  FormalDeformation d;
  d.order = 2;
  d.theta = {a.f * p.N1 - p.N0 * a.f, Matrix(dg, dM)};
  d.omega.assign(2, SkewTensor(dg, 3, dg));
  d.nu.assign(2, BlockCochain(dg, 1, 2, {dM}, dM));
  WedgeTable w3(dg, 3), w2(dg, 2);
  for (long rk = 0; rk < w3.count(); ++rk) {
    const IndexTuple& X = w3.basis[rk];
    Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), x3 = unit_vec(dg, X[2]);
    Vec n1 = p.N0.apply(x1), n2 = p.N0.apply(x2), n3 = p.N0.apply(x3);
    Vec om1 = T.br(n1, x2, x3) + T.br(x1, n2, x3) + T.br(x1, x2, n3) - p.N0.apply(T.br(x1, x2, x3));
    d.omega[0].set_value(rk, om1);
    Vec om2 = T.br(n1, n2, x3) + T.br(n1, x2, n3) + T.br(x1, n2, n3) - p.N0.apply(om1);
    d.omega[1].set_value(rk, om2);
  }
  for (long rk = 0; rk < w2.count(); ++rk) {
    const IndexTuple& X = w2.basis[rk];
    Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]);
    Vec n1 = p.N0.apply(x1), n2 = p.N0.apply(x2);
    std::array<long, 1> ranks{rk};
    for (int m = 0; m < dM; ++m) {
      Vec mm = unit_vec(dM, m), nm = p.N1.apply(mm);
      Vec nu1 = T.act(n1, x2, mm) + T.act(x1, n2, mm) + T.act(x1, x2, nm) - p.N1.apply(T.act(x1, x2, mm));
      Vec nu2 = T.act(n1, n2, mm) + T.act(n1, x2, nm) + T.act(x1, n2, nm) - p.N1.apply(nu1);
      std::array<int, 1> s{m};
      for (int k = 0; k < dM; ++k) {
        d.nu[0].value_at(d.nu[0].position(ranks, s))[k] = nu1[k];
        d.nu[1].value_at(d.nu[1].position(ranks, s))[k] = nu2[k];
      }
    }
  }
  return d;
}

/// Checks that T0 = id + lambda N0, T1 = id + lambda N1 intertwines the
/// deformed structure with the original one (the triviality witness) at the
/// given lambda values.
inline Report check_triviality_witness(const LMAlgebra& a, const FormalDeformation& d,
                                       const NijenhuisPair& p, std::span<const Rational> lambdas) {
  detail::require_arity3(a, "check_triviality_witness");
  const int dg = a.g.dim, dM = a.mdim();
  Report rep;
  rep.subject = a.name + " triviality witness";
  detail::Tri T{&a};
  for (const auto& lam : lambdas) {
    Matrix T0 = Matrix::identity(dg) + (lam * p.N0);
    Matrix T1 = Matrix::identity(dM) + (lam * p.N1);
    std::string tag = "lambda=" + lam.str() + ".";
    Matrix flam = a.f;
    {
      Rational lk(1);
      for (int i = 0; i < d.order; ++i) {
        lk *= lam;
        flam = flam + (lk * d.theta[i]);
      }
    }
    auto om_lam = [&](const Vec& x, const Vec& y, const Vec& z) {
      Vec out = T.br(x, y, z);
      Rational lk(1);
      for (int i = 0; i < d.order; ++i) {
        lk *= lam;
        std::array<Vec, 3> args{x, y, z};
        axpy(out, lk, d.omega[i].eval_vecs(args));
      }
      return out;
    };
    auto nu_lam = [&](const Vec& x, const Vec& y, const Vec& m) {
      Vec out = T.act(x, y, m);
      Rational lk(1);
      for (int i = 0; i < d.order; ++i) {
        lk *= lam;
        std::array<Vec, 2> b{x, y};
        std::array<Vec, 1> s{m};
        axpy(out, lk, d.nu[i].eval_vecs(b, s));
      }
      return out;
    };
    auto& w0 = rep.add(tag + "f_T1_eq_T0_flam");
    w0.record(detail::flatten(a.f * T1 - T0 * flam), {});
    auto& w1 = rep.add(tag + "bracket_homomorphism");
    for (const auto& X : wedge_basis(dg, 3)) {
      Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), x3 = unit_vec(dg, X[2]);
      Vec lhs = T0.apply(om_lam(x1, x2, x3));
      Vec rhs = T.br(T0.apply(x1), T0.apply(x2), T0.apply(x3));
      w1.record(lhs - rhs, {{"x", to_one_based(X)}});
    }
    auto& w2 = rep.add(tag + "action_homomorphism");
    for (const auto& X : wedge_basis(dg, 2))
      for (int m = 0; m < dM; ++m) {
        Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), mm = unit_vec(dM, m);
        Vec lhs = T1.apply(nu_lam(x1, x2, mm));
        Vec rhs = T.act(T0.apply(x1), T0.apply(x2), T1.apply(mm));
        w2.record(lhs - rhs, {{"x", to_one_based(X)}, {"m", {m + 1}}});
      }
  }
  return rep;
}

/// Order-k convolution identities sum_{i+j=k} of the formal family, for each
/// k <= order; k = 0 is the base structure, k = 1 the 2-cocycle layer.
inline Report validate_formal_deformation(const LMAlgebra& a, const FormalDeformation& d) {
  detail::require_arity3(a, "validate_formal_deformation");
  const int dg = a.g.dim, dM = a.mdim();
  Report rep;
  rep.subject = a.name + " formal deformation";
  detail::Tri T{&a};
  auto om_i = [&](int i, const Vec& x, const Vec& y, const Vec& z) {
    if (i == 0) return T.br(x, y, z);
    std::array<Vec, 3> args{x, y, z};
    return d.omega[i - 1].eval_vecs(args);
  };
  auto nu_i = [&](int i, const Vec& x, const Vec& y, const Vec& m) {
    if (i == 0) return T.act(x, y, m);
    std::array<Vec, 2> b{x, y};
    std::array<Vec, 1> s{m};
    return d.nu[i - 1].eval_vecs(b, s);
  };
  auto f_i = [&](int i, const Vec& m) { return i == 0 ? a.f.apply(m) : d.theta[i - 1].apply(m); };

  for (int k = 0; k <= d.order; ++k) {
    std::string tag = "k=" + std::to_string(k) + ".";
    auto& fk1 = rep.add(tag + "bracket_family");
    for (const auto& X : wedge_basis(dg, 2))
      for (const auto& Y : wedge_basis(dg, 3)) {
        Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]);
        std::array<Vec, 3> ys{unit_vec(dg, Y[0]), unit_vec(dg, Y[1]), unit_vec(dg, Y[2])};
        Vec res(dg, Rational(0));
        for (int i = 0; i <= k; ++i) {
          int j = k - i;
          if (i > d.order || j > d.order) continue;
          axpy(res, Rational(1), om_i(i, x1, x2, om_i(j, ys[0], ys[1], ys[2])));
          for (int q = 0; q < 3; ++q) {
            std::array<Vec, 3> yy = ys;
            yy[q] = om_i(j, x1, x2, ys[q]);
            axpy(res, Rational(-1), om_i(i, yy[0], yy[1], yy[2]));
          }
        }
        fk1.record(res, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}});
      }
    auto& fk2 = rep.add(tag + "action_family");
    for (const auto& X : wedge_basis(dg, 2))
      for (const auto& Y : wedge_basis(dg, 2))
        for (int m = 0; m < dM; ++m) {
          Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]);
          Vec y1 = unit_vec(dg, Y[0]), y2 = unit_vec(dg, Y[1]), mm = unit_vec(dM, m);
          Vec res(dM, Rational(0));
          for (int i = 0; i <= k; ++i) {
            int j = k - i;
            if (i > d.order || j > d.order) continue;
            axpy(res, Rational(1), nu_i(i, x1, x2, nu_i(j, y1, y2, mm)));
            axpy(res, Rational(-1), nu_i(i, om_i(j, x1, x2, y1), y2, mm));
            axpy(res, Rational(-1), nu_i(i, y1, om_i(j, x1, x2, y2), mm));
            axpy(res, Rational(-1), nu_i(i, y1, y2, nu_i(j, x1, x2, mm)));
          }
          fk2.record(res, {{"x", to_one_based(X)}, {"y", to_one_based(Y)}, {"m", {m + 1}}});
        }
    auto& fk3 = rep.add(tag + "equivariance_family");
    for (const auto& X : wedge_basis(dg, 2))
      for (int m = 0; m < dM; ++m) {
        Vec x1 = unit_vec(dg, X[0]), x2 = unit_vec(dg, X[1]), mm = unit_vec(dM, m);
        Vec res(dg, Rational(0));
        for (int i = 0; i <= k; ++i) {
          int j = k - i;
          if (i > d.order || j > d.order) continue;
          axpy(res, Rational(1), f_i(i, nu_i(j, x1, x2, mm)));
          axpy(res, Rational(-1), om_i(i, x1, x2, f_i(j, mm)));
        }
        fk3.record(res, {{"x", to_one_based(X)}, {"m", {m + 1}}});
      }
  }
  return rep;
}

/// Degree-2 cochain of the adjoint representation carrying a deformation
/// triple (theta as the Hom(M,W)-part, omega, nu).
inline LMCochain triple_as_adjoint_cochain(const LMAlgebra& a, const LMRepresentation& adj,
                                           const DeformationTriple& t) {
  LMCochain c(a, adj, 2);
  const auto& wt = c.omega.table();
  for (long rk = 0; rk < wt.count(); ++rk)
    for (int z = 0; z < a.g.dim; ++z) {
      IndexTuple full = wt.basis[rk];
      full.push_back(z);
      Vec v = t.omega.eval(full);
      std::array<long, 1> ranks{rk};
      std::array<int, 1> slots{z};
      long pos = c.omega.position(ranks, slots);
      for (int k = 0; k < a.g.dim; ++k) c.omega.value_at(pos)[k] = v[k];
    }
  c.nu = t.nu;
  for (int m = 0; m < a.mdim(); ++m)
    for (int w = 0; w < a.g.dim; ++w) c.theta.value_at(m)[w] = t.theta.at(w, m);
  return c;
}

/// Comparison of two deformations at first order: their leading triples are
/// cohomologous iff the difference lies in the image of the degree-1
/// coboundary of the adjoint complex (decided by an exact linear solve).
/// Returns the solving 1-cochain when the classes agree.
inline std::optional<std::pair<Matrix, Matrix>> first_order_cohomologous(
    const LMAlgebra& a, const DeformationTriple& d1, const DeformationTriple& d2) {
  detail::require_arity3(a, "first_order_cohomologous");
  LMRepresentation adj = adjoint_lm_representation(a);
  Vec diff = lm_cochain_coords(a, adj, triple_as_adjoint_cochain(a, adj, d1));
  Vec other = lm_cochain_coords(a, adj, triple_as_adjoint_cochain(a, adj, d2));
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other[i];
  auto b = solve(lm_coboundary_matrix(a, adj, 1), diff);
  if (!b) return std::nullopt;
  const int dg = a.g.dim, dM = a.mdim();
  Matrix b0(dg, dg), b1(dM, dM);
  long pos = 0;
  for (int z = 0; z < dg; ++z)
    for (int w = 0; w < dg; ++w) b0.at(w, z) = (*b)[pos++];
  for (int m = 0; m < dM; ++m)
    for (int v = 0; v < dM; ++v) b1.at(v, m) = (*b)[pos++];
  return std::make_pair(std::move(b0), std::move(b1));
}

/// Sufficient rigidity criterion: H^2 with adjoint coefficients vanishes.
/// The converse is not claimed; a nonzero H^2 is reported as inconclusive.
inline Report rigidity_report(const LMAlgebra& a) {
  Report v = validate_lm(a);
  if (!v.pass()) throw ValidationError("rigidity_report: input fails validate_lm", v);
  LMRepresentation adj = adjoint_lm_representation(a);
  LMCohomologyDims h2 = lm_cohomology_dim(a, adj, 2);
  Report rep;
  rep.subject = a.name;
  auto& chk = rep.add("rigidity");
  chk.instances = 1;
  if (h2.cohomology == 0) {
    chk.note = "rigid (sufficient condition met): dim H^2 = 0 with adjoint coefficients";
  } else {
    // sufficient, not necessary: a nonzero H^2 decides nothing
    chk.note = "inconclusive (dim H^2 = " + std::to_string(h2.cohomology) + ")";
    chk.pass = false;
  }
  return rep;
}

}  // namespace nlal

#endif
