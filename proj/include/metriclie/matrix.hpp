#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metriclie/rational.hpp"

namespace metriclie {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static Matrix from_rows(const std::vector<Vec>& rows_in, std::size_t cols_hint = 0) {
    std::size_t c = rows_in.empty() ? cols_hint : rows_in.front().size();
    Matrix m(rows_in.size(), c);
    for (std::size_t i = 0; i < rows_in.size(); ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows_in[i][j];
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols_in, std::size_t rows_hint = 0) {
    std::size_t r = cols_in.empty() ? rows_hint : cols_in.front().size();
    Matrix m(r, cols_in.size());
    for (std::size_t j = 0; j < cols_in.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) m(i, j) = cols_in[j][i];
    return m;
  }

  static Matrix from_nested(std::initializer_list<std::initializer_list<Rational>> rows_in) {
    std::vector<Vec> rows;
    for (const auto& r : rows_in) rows.emplace_back(r);
    return from_rows(rows);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = c * m.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

inline Vec mat_vec(const Matrix& m, const Vec& v) {
  Vec r = zero_vec(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

inline Matrix matrix_power(const Matrix& m, std::size_t k) {
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

/// Reduced row echelon form. Pivots are the first nonzero column entries in
/// top-to-bottom order, so the result is deterministic.
inline Matrix rref(Matrix m, std::size_t* rank_out = nullptr,
                   std::vector<std::size_t>* pivot_cols = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t lead = 0; lead < m.cols() && r < m.rows(); ++lead) {
    std::size_t i = r;
    while (i < m.rows() && m(i, lead).is_zero()) ++i;
    if (i == m.rows()) continue;
    if (i != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(r, j));
    Rational inv = Rational(1) / m(r, lead);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k == r || m(k, lead).is_zero()) continue;
      Rational f = m(k, lead);
      for (std::size_t j = 0; j < m.cols(); ++j) m(k, j) -= f * m(r, j);
    }
    pivots.push_back(lead);
    ++r;
  }
  if (rank_out) *rank_out = pivots.size();
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return m;
}

inline std::size_t rank(const Matrix& m) {
  std::size_t r = 0;
  rref(m, &r);
  return r;
}

/// Basis of the null space {x : m x = 0}, one vector per free column,
/// in increasing free-column order.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  Matrix e = rref(m, &r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = Rational(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -e(pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A particular solution of m x = b (free variables set to zero), or
/// nullopt when inconsistent.
inline std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  Matrix e = rref(aug, &r, &pivots);
  for (auto p : pivots)
    if (p == m.cols()) return std::nullopt;  // row [0 ... 0 | 1]
  Vec x = zero_vec(m.cols());
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = e(pr, m.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  std::size_t r = 0;
  Matrix e = rref(aug, &r);
  if (r < n) return std::nullopt;
  // the left block may have pivots past column n-1 only if singular; r == n
  for (std::size_t i = 0; i < n; ++i)
    if (e(i, i) != Rational(1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
}

inline Rational determinant(Matrix m) {
  if (!m.is_square()) throw MalformedInputError("determinant of non-square matrix");
  std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Exact PLU factorization of a square matrix with first-nonzero pivoting.
/// One factorization serves many right-hand sides.
class LuSolver {
 public:
  explicit LuSolver(const Matrix& m) : n_(m.rows()), lu_(m), perm_(n_) {
    if (!m.is_square()) throw MalformedInputError("LU of non-square matrix");
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && lu_(p, c).is_zero()) ++p;
      if (p == n_) {
        singular_ = true;
        return;
      }
      if (p != c) {
        std::swap(perm_[p], perm_[c]);
        for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(p, j), lu_(c, j));
      }
      Rational inv = Rational(1) / lu_(c, c);
      for (std::size_t i = c + 1; i < n_; ++i) {
        if (lu_(i, c).is_zero()) continue;
        Rational f = lu_(i, c) * inv;
        lu_(i, c) = f;  // L factor below the diagonal
        for (std::size_t j = c + 1; j < n_; ++j) lu_(i, j) -= f * lu_(c, j);
      }
    }
  }

  bool singular() const { return singular_; }

  /// Solves A x = b exactly. Requires !singular().
  Vec solve(const Vec& b) const {
    Vec y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
      y[i] = s;
    }
    Vec x(n_);
    for (std::size_t i = n_; i-- > 0;) {
      Rational s = y[i];
      for (std::size_t j = i + 1; j < n_; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

 private:
  std::size_t n_;
  Matrix lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

// ---------------------------------------------------------------------------
// Subspaces, represented as lists of coordinate vectors. The canonical form
// (RREF rows) makes equality and membership tests unambiguous.

inline std::vector<Vec> subspace_canonical(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors, dim);
  std::size_t r = 0;
  Matrix e = rref(m, &r);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(e.row(i));
  return basis;
}

inline bool subspace_contains(const std::vector<Vec>& basis, const Vec& v, std::size_t dim) {
  if (is_zero_vec(v)) return true;
  std::vector<Vec> all = basis;
  all.push_back(v);
  return subspace_canonical(all, dim).size() == subspace_canonical(basis, dim).size();
}

inline bool subspace_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
  return subspace_canonical(a, dim) == subspace_canonical(b, dim);
}

/// Coordinates of v in the span of `basis`, or nullopt when v is outside.
inline std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_linear(Matrix::from_columns(basis), v);
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

inline std::string to_string(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).to_string();
    }
    s += "]";
    if (i + 1 < m.rows()) s += "\n";
  }
  return s;
}

}  // namespace metriclie
