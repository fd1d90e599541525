#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metriclie/quadratic_space.hpp"

namespace metriclie {

/// Lie algebra given by structure constants on a named basis. Brackets are
/// stored sparsely for i < j only; antisymmetry is structural.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis_names = {})
      : dim_(dim), names_(std::move(basis_names)) {
    if (names_.empty()) {
      for (std::size_t i = 1; i <= dim_; ++i) names_.push_back("e" + std::to_string(i));
    }
    if (names_.size() != dim_)
      throw MalformedInputError("LieAlgebra: basis name count does not match dimension");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  std::optional<std::size_t> basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// Sets [e_i, e_j] = value for i < j. Zero vectors are not stored.
  void set_bracket(std::size_t i, std::size_t j, Vec value) {
    if (i >= j) throw MalformedInputError("set_bracket: requires i < j");
    if (j >= dim_) throw MalformedInputError("set_bracket: index out of range");
    if (value.size() != dim_) throw MalformedInputError("set_bracket: value dimension mismatch");
    if (is_zero_vec(value))
      structure_.erase({i, j});
    else
      structure_[{i, j}] = std::move(value);
  }

  /// [e_i, e_j] for arbitrary i, j (antisymmetry applied).
  Vec bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vec(dim_);
    bool flip = i > j;
    auto it = structure_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == structure_.end()) return zero_vec(dim_);
    return flip ? Rational(-1) * it->second : it->second;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r = zero_vec(dim_);
    for (const auto& [ij, v] : structure_) {
      Rational c = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k) r[k] += c * v[k];
    }
    return r;
  }

  /// Matrix of Y -> [X, Y].
  Matrix ad_matrix(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec ej = zero_vec(dim_);
      ej[j] = Rational(1);
      Vec col = bracket(x, ej);
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  Matrix ad_basis(std::size_t i) const {
    Vec e = zero_vec(dim_);
    e[i] = Rational(1);
    return ad_matrix(e);
  }

  const std::map<std::pair<std::size_t, std::size_t>, Vec>& structure() const { return structure_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> structure_;
};

struct JacobiReport {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Verifies [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples.
inline JacobiReport check_jacobi(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = zero_vec(n), ej = zero_vec(n), ek = zero_vec(n);
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        ek[k] = Rational(1);
        Vec s = alg.bracket(alg.bracket_basis(i, j), ek) + alg.bracket(alg.bracket_basis(j, k), ei) +
                alg.bracket(alg.bracket_basis(k, i), ej);
        if (!is_zero_vec(s)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {true, std::nullopt};
}

/// Null space of the stacked ad matrices.
inline std::vector<Vec> center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix stacked(n * n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Matrix ad = alg.ad_basis(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = ad(i, j);
  }
  return kernel_basis(stacked);
}

/// Span of all basis brackets, in canonical (RREF) form.
inline std::vector<Vec> derived_subalgebra(const LieAlgebra& alg) {
  std::vector<Vec> gens;
  for (const auto& [ij, v] : alg.structure()) gens.push_back(v);
  return subspace_canonical(gens, alg.dim());
}

/// True iff [g, a] lies in a and [a, a] = 0.
inline bool is_abelian_ideal(const LieAlgebra& alg, const std::vector<Vec>& subspace) {
  const std::size_t n = alg.dim();
  std::vector<Vec> canon = subspace_canonical(subspace, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec eb = zero_vec(n);
    eb[b] = Rational(1);
    for (const auto& a : canon)
      if (!subspace_contains(canon, alg.bracket(eb, a), n)) return false;
  }
  for (std::size_t p = 0; p < canon.size(); ++p)
    for (std::size_t q = p + 1; q < canon.size(); ++q)
      if (!is_zero_vec(alg.bracket(canon[p], canon[q]))) return false;
  return true;
}

inline bool is_unimodular_lie(const LieAlgebra& alg) {
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    Matrix ad = alg.ad_basis(b);
    Rational tr(0);
    for (std::size_t i = 0; i < alg.dim(); ++i) tr += ad(i, i);
    if (!tr.is_zero()) return false;
  }
  return true;
}

/// Symmetric nondegenerate bilinear form on the algebra.
struct PseudoMetric {
  Matrix gram;

  PseudoMetric() = default;
  explicit PseudoMetric(Matrix g) : gram(std::move(g)) {
    if (!gram.is_symmetric()) throw MalformedInputError("PseudoMetric: gram is not symmetric");
  }
};

struct MetricLieAlgebra {
  LieAlgebra algebra;
  PseudoMetric metric;

  MetricLieAlgebra() = default;
  MetricLieAlgebra(LieAlgebra alg, PseudoMetric m)
      : algebra(std::move(alg)), metric(std::move(m)) {
    if (algebra.dim() != metric.gram.rows())
      throw MalformedInputError("MetricLieAlgebra: algebra/metric dimension mismatch");
  }

  std::size_t dim() const { return algebra.dim(); }
  QuadraticSpace space() const { return QuadraticSpace(metric.gram); }
  Rational inner(const Vec& x, const Vec& y) const { return space().inner(x, y); }
};

/// A candidate isomorphism phi between metric Lie algebras, as the matrix
/// whose columns are the images of the source basis in target coordinates.
struct LinearMapBetweenAlgebras {
  MetricLieAlgebra source;
  MetricLieAlgebra target;
  Matrix matrix;
};

struct IsomorphismCheck {
  bool valid = false;
  std::string failure_reason;
};

/// Checks phi[X,Y] = [phi X, phi Y] on all basis pairs and
/// phi^T gram_target phi = gram_source.
inline IsomorphismCheck verify_isometric_isomorphism(const LinearMapBetweenAlgebras& map) {
  const std::size_t n = map.source.dim();
  if (map.target.dim() != n || map.matrix.rows() != n || map.matrix.cols() != n)
    throw PreconditionError("verify_isometric_isomorphism: dimension mismatch");
  if (!inverse(map.matrix))
    throw PreconditionError("verify_isometric_isomorphism: map matrix is not invertible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = mat_vec(map.matrix, map.source.algebra.bracket_basis(i, j));
      Vec rhs = map.target.algebra.bracket(map.matrix.column(i), map.matrix.column(j));
      if (lhs != rhs)
        return {false, "bracket not preserved on basis pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")"};
    }
  Matrix pulled = map.matrix.transpose() * map.target.metric.gram * map.matrix;
  if (pulled != map.source.metric.gram) return {false, "metric not preserved under pullback"};
  return {true, ""};
}

}  // namespace metriclie
