#ifndef NLAL_NLIE_HPP
#define NLAL_NLIE_HPP

#include <string>
#include <vector>

#include "nlal/report.hpp"
#include "nlal/tensor.hpp"

namespace nlal {

/// n-Lie (Filippov) algebra by structure constants. The bracket is totally
/// skew-symmetric by storage; the fundamental identity is checked by
/// validate_n_lie, not enforced on construction (invalid algebras are useful
/// as negative fixtures).
struct NLieAlgebra {
  int n = 0;
  int dim = 0;
  SkewTensor bracket;  // arity n, target = the algebra itself
  std::string name;

  NLieAlgebra() = default;
  NLieAlgebra(int n_, int dim_, std::string name_ = "")
      : n(n_), dim(dim_), bracket(dim_, n_, dim_), name(std::move(name_)) {}

  Vec bracket_idx(const IndexTuple& t) const { return bracket.eval(t); }
  Vec bracket_vecs(std::span<const Vec> args) const { return bracket.eval_vecs(args); }
};

/// Leibniz n-algebra: same fundamental identity, no symmetry on the bracket.
/// Dense table over all basis tuples.
struct LeibnizNAlgebra {
  int n = 0;
  int dim = 0;
  std::vector<Rational> table;  // [i1..in row-major][target coordinate]
  std::string name;

  LeibnizNAlgebra() = default;
  LeibnizNAlgebra(int n_, int dim_, std::string name_ = "")
      : n(n_), dim(dim_), table(pow_ll(dim_, n_) * dim_), name(std::move(name_)) {}

  static std::size_t pow_ll(int b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= static_cast<std::size_t>(b);
    return r;
  }

  std::span<Rational> at(const IndexTuple& t) {
    return {table.data() + static_cast<std::size_t>(tuple_rank(t, dim)) * dim,
            static_cast<std::size_t>(dim)};
  }
  std::span<const Rational> at(const IndexTuple& t) const {
    return {table.data() + static_cast<std::size_t>(tuple_rank(t, dim)) * dim,
            static_cast<std::size_t>(dim)};
  }

  Vec bracket_idx(const IndexTuple& t) const {
    auto v = at(t);
    return Vec(v.begin(), v.end());
  }

  Vec bracket_vecs(std::span<const Vec> args) const {
    Vec out(dim, Rational(0));
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
      auto v = at(t);
      for (int k = 0; k < dim; ++k) out[k] += c * v[k];
    } while (next_index(pick, radix));
    return out;
  }
};

namespace detail {

/// Fundamental identity residual at basis tuples x (n-1 of them) and y (n):
/// [x1..x_{n-1},[y1..yn]] - sum_i [y1..[x,y_i]..yn].
template <class Algebra>
Vec fundamental_identity_residual(const Algebra& a, const IndexTuple& x, const IndexTuple& y) {
  Vec inner = a.bracket_idx(y);
  Vec lhs(a.dim, Rational(0));
  IndexTuple t = x;
  t.push_back(0);
  for (int l = 0; l < a.dim; ++l) {
    if (inner[l].is_zero()) continue;
    t.back() = l;
    axpy(lhs, inner[l], a.bracket_idx(t));
  }
  Vec rhs(a.dim, Rational(0));
  for (int i = 0; i < a.n; ++i) {
    IndexTuple xi = x;
    xi.push_back(y[i]);
    Vec w = a.bracket_idx(xi);
    IndexTuple yy = y;
    for (int l = 0; l < a.dim; ++l) {
      if (w[l].is_zero()) continue;
      yy[i] = l;
      axpy(rhs, w[l], a.bracket_idx(yy));
    }
  }
  return lhs - rhs;
}

}  // namespace detail

/// Checks the fundamental identity on all increasing basis tuples
/// (x1<..<x_{n-1}; y1<..<yn); skew storage makes this exhaustive.
inline Report validate_n_lie(const NLieAlgebra& a) {
  Report rep;
  rep.subject = a.name;
  auto& chk = rep.add("fundamental_identity");
  auto xs = wedge_basis(a.dim, a.n - 1);
  auto ys = wedge_basis(a.dim, a.n);
  for (const auto& x : xs)
    for (const auto& y : ys)
      chk.record(detail::fundamental_identity_residual(a, x, y),
                 {{"x", to_one_based(x)}, {"y", to_one_based(y)}});
  return rep;
}

/// Checks the fundamental identity on all basis tuples; no symmetry assumed.
inline Report validate_leibniz_n(const LeibnizNAlgebra& a) {
  Report rep;
  rep.subject = a.name;
  auto& chk = rep.add("fundamental_identity");
  IndexTuple x(a.n - 1, 0), y(a.n, 0);
  do {
    std::fill(y.begin(), y.end(), 0);
    do {
      chk.record(detail::fundamental_identity_residual(a, x, y),
                 {{"x", to_one_based(x)}, {"y", to_one_based(y)}});
    } while (next_index(y, a.dim));
  } while (next_index(x, a.dim));
  return rep;
}

/// Matrix of ad(X): y -> [x1,..,x_{n-1},y] for X given in wedge-basis
/// coordinates of L = wedge^{n-1} g.
inline Matrix ad_matrix(const NLieAlgebra& a, const Vec& X) {
  WedgeTable lt(a.dim, a.n - 1);
  if (static_cast<long>(X.size()) != lt.count()) throw std::invalid_argument("ad_matrix: L coordinate length");
  Matrix m(a.dim, a.dim);
  for (long r = 0; r < lt.count(); ++r) {
    if (X[r].is_zero()) continue;
    IndexTuple t = lt.basis[r];
    t.push_back(0);
    for (int y = 0; y < a.dim; ++y) {
      t.back() = y;
      Vec v = a.bracket_idx(t);
      for (int k = 0; k < a.dim; ++k) m.at(k, y) += X[r] * v[k];
    }
  }
  return m;
}

inline Matrix ad_matrix(const NLieAlgebra& a, const IndexTuple& x) {
  WedgeTable lt(a.dim, a.n - 1);
  auto [sign, sorted] = normalize_wedge(x);
  Matrix m(a.dim, a.dim);
  if (sign == 0) return m;
  Vec X(lt.count(), Rational(0));
  X[lt.rank(sorted)] = Rational(sign);
  return ad_matrix(a, X);
}

/// phi([x1..xn]) = [phi(x1)..phi(xn)]' on all increasing basis tuples.
inline Report is_nlie_homomorphism(const Matrix& phi, const NLieAlgebra& a, const NLieAlgebra& b) {
  if (a.n != b.n) throw ShapeError("is_nlie_homomorphism: arity mismatch");
  if (phi.rows() != b.dim || phi.cols() != a.dim)
    throw ShapeError("is_nlie_homomorphism: matrix shape mismatch");
  Report rep;
  rep.subject = a.name + " -> " + b.name;
  auto& chk = rep.add("homomorphism");
  std::vector<Vec> cols(a.dim);
  for (int j = 0; j < a.dim; ++j) cols[j] = phi.col(j);
  for (const auto& t : wedge_basis(a.dim, a.n)) {
    Vec lhs = phi.apply(a.bracket_idx(t));
    std::vector<Vec> args(a.n);
    for (int i = 0; i < a.n; ++i) args[i] = cols[t[i]];
    Vec rhs = b.bracket_vecs(args);
    chk.record(lhs - rhs, {{"x", to_one_based(t)}});
  }
  return rep;
}

}  // namespace nlal

#endif
