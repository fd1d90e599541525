#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "metriclie/lie_algebra.hpp"

namespace metriclie {

/// Bilinear map g x g -> g with full coefficient storage (no symmetry).
class BilinearProduct {
 public:
  BilinearProduct() = default;
  explicit BilinearProduct(std::size_t dim) : dim_(dim), coeffs_(dim * dim, zero_vec(dim)) {}

  std::size_t dim() const { return dim_; }
  const Vec& coeff(std::size_t i, std::size_t j) const { return coeffs_[i * dim_ + j]; }
  void set_coeff(std::size_t i, std::size_t j, Vec v) { coeffs_[i * dim_ + j] = std::move(v); }

  Vec apply(const Vec& x, const Vec& y) const {
    Vec r = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        Rational c = x[i] * y[j];
        const Vec& v = coeff(i, j);
        for (std::size_t k = 0; k < dim_; ++k) r[k] += c * v[k];
      }
    }
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> coeffs_;
};

/// Symmetric bilinear map; coefficients stored for i <= j only.
class SymmetricProduct {
 public:
  SymmetricProduct() = default;
  explicit SymmetricProduct(std::size_t dim)
      : dim_(dim), coeffs_(dim * (dim + 1) / 2, zero_vec(dim)) {}

  std::size_t dim() const { return dim_; }

  const Vec& coeff(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }
  void set_coeff(std::size_t i, std::size_t j, Vec v) { coeffs_[index(i, j)] = std::move(v); }

  Vec apply(const Vec& x, const Vec& y) const {
    Vec r = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Rational c = x[i] * y[j];
        if (c.is_zero()) continue;
        const Vec& v = coeff(i, j);
        for (std::size_t k = 0; k < dim_; ++k) r[k] += c * v[k];
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : coeffs_)
      if (!is_zero_vec(v)) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> coeffs_;

  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i + 1) / 2 + j;  // upper-triangular row-major
  }
};

/// Covariant 3-tensor, full cube storage.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), v_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * dim_ + j) * dim_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return v_[(i * dim_ + j) * dim_ + k];
  }

  bool is_partially_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (at(i, j, k) != at(j, i, k)) return false;
    return true;
  }

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 r(a.dim_);
    for (std::size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] + b.v_[k];
    return r;
  }
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 r(a.dim_);
    for (std::size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] - b.v_[k];
    return r;
  }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dim_ == b.dim_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> v_;
};

/// Levi-Civita product on the algebra via the Koszul formula; all basis
/// coefficient vectors obtained from one cached factorization of the gram.
inline BilinearProduct levi_civita(const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  LuSolver lu(mla.metric.gram);
  if (lu.singular()) throw DegenerateMetricError("levi_civita: metric is degenerate");
  BilinearProduct nabla(n);
  const QuadraticSpace space = mla.space();
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = zero_vec(n);
      ej[j] = Rational(1);
      Vec rhs = zero_vec(n);
      Vec bij = mla.algebra.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = zero_vec(n);
        ek[k] = Rational(1);
        rhs[k] = half() * (space.inner(bij, ek) - space.inner(mla.algebra.bracket_basis(j, k), ei) +
                           space.inner(mla.algebra.bracket_basis(k, i), ej));
      }
      nabla.set_coeff(i, j, lu.solve(rhs));
    }
  }
  return nabla;
}

/// Symmetric part of the Levi-Civita product:
/// <U(e_i,e_j), e_k> = 1/2 <[e_k,e_i], e_j> + 1/2 <[e_k,e_j], e_i>.
inline SymmetricProduct u_tensor(const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  LuSolver lu(mla.metric.gram);
  if (lu.singular()) throw DegenerateMetricError("u_tensor: metric is degenerate");
  SymmetricProduct u(n);
  const QuadraticSpace space = mla.space();
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = Rational(1);
    for (std::size_t j = i; j < n; ++j) {
      Vec ej = zero_vec(n);
      ej[j] = Rational(1);
      Vec rhs = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k)
        rhs[k] = half() * (space.inner(mla.algebra.bracket_basis(k, i), ej) +
                           space.inner(mla.algebra.bracket_basis(k, j), ei));
      u.set_coeff(i, j, lu.solve(rhs));
    }
  }
  return u;
}

/// theta(i,j,k) = <U(e_i,e_j), e_k>.
inline Tensor3 theta_tensor(const SymmetricProduct& u, const QuadraticSpace& space) {
  const std::size_t n = u.dim();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& uij = u.coeff(i, j);
      Vec paired = mat_vec(space.gram, uij);
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = paired[k];
    }
  return t;
}

inline Tensor3 theta_tensor(const MetricLieAlgebra& mla) {
  return theta_tensor(u_tensor(mla), mla.space());
}

struct CyclicReport {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

/// theta(x,y,z) + theta(y,z,x) + theta(z,x,y) = 0 on all basis triples.
inline CyclicReport check_cyclic(const Tensor3& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(t.at(i, j, k) + t.at(j, k, i) + t.at(k, i, j)).is_zero())
          return {false, std::array<std::size_t, 3>{i, j, k}};
  return {true, std::nullopt};
}

/// z -> sum_{i,j} g^{ij} theta(e_i, e_j, z), as covector components.
inline Vec trace_12(const Tensor3& t, const QuadraticSpace& space) {
  auto ginv = inverse(space.gram);
  if (!ginv) throw DegenerateMetricError("trace_12: metric is degenerate");
  const std::size_t n = t.dim();
  Vec out = zero_vec(n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(*ginv)(i, j).is_zero()) out[z] += (*ginv)(i, j) * t.at(i, j, z);
  return out;
}

/// x -> sum_{j,k} g^{jk} theta(x, e_j, e_k).
inline Vec trace_23(const Tensor3& t, const QuadraticSpace& space) {
  auto ginv = inverse(space.gram);
  if (!ginv) throw DegenerateMetricError("trace_23: metric is degenerate");
  const std::size_t n = t.dim();
  Vec out = zero_vec(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(*ginv)(j, k).is_zero()) out[x] += (*ginv)(j, k) * t.at(x, j, k);
  return out;
}

/// Coordinate matrix of L_X : Y -> X * Y.
inline Matrix left_mult_matrix(const SymmetricProduct& u, const Vec& x) {
  const std::size_t n = u.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec ej = zero_vec(n);
    ej[j] = Rational(1);
    Vec col = u.apply(x, ej);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

inline Rational trace(const Matrix& m) {
  Rational t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace metriclie
