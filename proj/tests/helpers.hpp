#pragma once

#include <random>
#include <string>
#include <vector>

#include "metriclie/metriclie.hpp"

namespace testutil {

using namespace metriclie;

inline Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = Rational(1);
  return v;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// Positive-definite gram L^T L with unit lower-triangular-ish random L.
inline Matrix random_posdef_gram(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> off(-2, 2);
  std::uniform_int_distribution<int> diag(1, 3);
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(off(rng));
    l(i, i) = Rational(diag(rng));
  }
  return l.transpose() * l;
}

/// Random symmetric nondegenerate gram with entries in {-3..3}.
inline Matrix random_nondegenerate_gram(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        g(i, j) = Rational(d(rng));
        g(j, i) = g(i, j);
      }
    if (!determinant(g).is_zero()) return g;
  }
}

/// Random invertible rational matrix.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

inline LieAlgebra heisenberg3() {
  LieAlgebra alg(3, {"E", "F", "Z"});
  alg.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1)});
  return alg;
}

inline LieAlgebra aff_r() {  // [e1, e2] = e2
  LieAlgebra alg(2);
  alg.set_bracket(0, 1, Vec{Rational(0), Rational(1)});
  return alg;
}

inline MetricLieAlgebra euclidean_h3() {
  return MetricLieAlgebra(heisenberg3(), PseudoMetric(Matrix::identity(3)));
}

inline MetricLieAlgebra aff_r_mla(Matrix gram) {
  return MetricLieAlgebra(aff_r(), PseudoMetric(std::move(gram)));
}

/// Solvable / nilpotent bracket templates per dimension, all Jacobi-valid.
inline std::vector<LieAlgebra> bracket_templates(std::size_t dim) {
  std::vector<LieAlgebra> out;
  out.emplace_back(dim);  // abelian
  if (dim >= 2) {
    LieAlgebra aff(dim);  // aff(R) + abelian
    aff.set_bracket(0, 1, basis_vec(dim, 1));
    out.push_back(aff);
  }
  if (dim >= 3) {
    LieAlgebra h(dim);  // h3 + abelian
    h.set_bracket(0, 1, basis_vec(dim, 2));
    out.push_back(h);

    LieAlgebra r3(dim);  // [e1,e2] = e2, [e1,e3] = e2 + e3 (solvable)
    r3.set_bracket(0, 1, basis_vec(dim, 1));
    r3.set_bracket(0, 2, basis_vec(dim, 1) + basis_vec(dim, 2));
    out.push_back(r3);
  }
  if (dim >= 4) {
    LieAlgebra n4(dim);  // filiform: [e1,e2] = e3, [e1,e3] = e4
    n4.set_bracket(0, 1, basis_vec(dim, 2));
    n4.set_bracket(0, 2, basis_vec(dim, 3));
    out.push_back(n4);

    LieAlgebra aff2(dim);  // aff(R) x aff(R)
    aff2.set_bracket(0, 1, basis_vec(dim, 1));
    aff2.set_bracket(2, 3, basis_vec(dim, 3));
    out.push_back(aff2);
  }
  if (dim >= 5) {
    LieAlgebra h5(dim);  // 5-dim Heisenberg
    h5.set_bracket(0, 1, basis_vec(dim, 4));
    h5.set_bracket(2, 3, basis_vec(dim, 4));
    out.push_back(h5);
  }
  return out;
}

/// Coordinate change along an invertible P: an isometrically isomorphic copy
/// by construction. The map {source: transformed, target: mla, matrix: P}
/// passes verify_isometric_isomorphism.
inline MetricLieAlgebra transform_mla(const MetricLieAlgebra& mla, const Matrix& p) {
  const std::size_t n = mla.dim();
  Matrix pinv = *inverse(p);
  LieAlgebra alg(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // [f_i, f_j]_new expressed in the new basis, where f_i = P e_i
      Vec br = mla.algebra.bracket(p.column(i), p.column(j));
      alg.set_bracket(i, j, mat_vec(pinv, br));
    }
  // <f_i, f_j>_new = <P e_i, P e_j>_old: new gram = P^T G P... the transformed
  // algebra carries the same abstract metric in the new coordinates
  Matrix g = p.transpose() * mla.metric.gram * p;
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

}  // namespace testutil
