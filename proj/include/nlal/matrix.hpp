#ifndef NLAL_MATRIX_HPP
#define NLAL_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "nlal/rational.hpp"

namespace nlal {

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// v += c * w
inline void axpy(Vec& v, const Rational& c, const Vec& w) {
  if (v.size() != w.size()) throw std::invalid_argument("axpy: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

inline Vec operator+(Vec a, const Vec& b) { axpy(a, Rational(1), b); return a; }
inline Vec operator-(Vec a, const Vec& b) { axpy(a, Rational(-1), b); return a; }

inline Vec scaled(const Vec& v, const Rational& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline Vec unit_vec(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
    Vec r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  Vec col(int j) const {
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  friend Matrix operator*(const Rational& c, Matrix m) {
    for (auto& x : m.a_) x *= c;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

namespace detail {

/// In-place reduced row echelon form; pivot = first nonzero entry in column
/// order (deterministic by design). Returns the pivot columns.
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank over Q, exact.
inline int rank(Matrix m) { return static_cast<int>(detail::rref(m).size()); }

/// Basis of the null space; rank(m) + result.size() == cols(m).
/// Deterministic: one vector per free column, ascending.
inline std::vector<Vec> kernel_basis(Matrix m) {
  int cols = m.cols();
  std::vector<int> pivots = detail::rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols, Rational(0));
    v[fc] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some exact solution of m x = b, or nullopt when inconsistent.
/// Free variables are set to zero.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

/// Solves m X = B column by column; nullopt when any column is inconsistent.
inline std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
  Matrix x(m.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto xe = solve(m, b.col(j));
    if (!xe) return std::nullopt;
    for (int i = 0; i < m.cols(); ++i) x.at(i, j) = (*xe)[i];
  }
  return x;
}

}  // namespace nlal

#endif
