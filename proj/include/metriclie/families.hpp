#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metriclie/lie_algebra.hpp"

namespace metriclie {

/// Heisenberg algebra on {E, F, Z} with [E,F] = Z and the metric
/// <E,E> = eps, <F,Z> = 1, everything else zero.
inline MetricLieAlgebra heisenberg_lorentzian(int eps) {
  if (eps != 1 && eps != -1)
    throw PreconditionError("heisenberg_lorentzian: eps must be +1 or -1");
  LieAlgebra alg(3, {"E", "F", "Z"});
  alg.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1)});
  Matrix g(3, 3);
  g(0, 0) = Rational(eps);
  g(1, 2) = g(2, 1) = Rational(1);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

/// sl(2,R) presentation with [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = -2e1 - e2
/// and the Lorentzian metric diag(-1, 1, 1).
inline MetricLieAlgebra sl2_example() {
  LieAlgebra alg(3);
  alg.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1)});
  alg.set_bracket(0, 2, Vec{Rational(1), Rational(0), Rational(0)});
  alg.set_bracket(1, 2, Vec{Rational(-2), Rational(-1), Rational(0)});
  Matrix g(3, 3);
  g(0, 0) = Rational(-1);
  g(1, 1) = Rational(1);
  g(2, 2) = Rational(1);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

/// Almost-abelian algebra on {e} + a: [e, X] = T X on the abelian ideal a,
/// metric gram_a on a, <e,e> = eps, e orthogonal to a. Basis order: e first.
inline MetricLieAlgebra almost_abelian(const Matrix& t, const Matrix& gram_a, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("almost_abelian: eps must be +1 or -1");
  if (!gram_a.is_symmetric() || !t.is_square() || t.rows() != gram_a.rows())
    throw MalformedInputError("almost_abelian: shape mismatch");
  if (determinant(gram_a).is_zero())
    throw DegenerateMetricError("almost_abelian: ideal metric is degenerate");
  const std::size_t m = t.rows();
  const std::size_t n = m + 1;
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  LieAlgebra alg(n, std::move(names));
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = zero_vec(n);
    for (std::size_t i = 0; i < m; ++i) v[1 + i] = t(i, j);
    alg.set_bracket(0, 1 + j, std::move(v));
  }
  Matrix g(n, n);
  g(0, 0) = Rational(eps);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(1 + i, 1 + j) = gram_a(i, j);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

/// Semidirect extension R e x_{D_beta} (W + W*) x abelian extra factor.
/// Basis order: e, W basis, W* basis, extra. Brackets: [e, xi_j] = beta xi_j
/// in W; metric: <e,e> = eps, canonical neutral pairing on W + W*, the given
/// gram on the extra block, blocks mutually orthogonal.
inline MetricLieAlgebra beta_semidirect(std::size_t k, const Matrix& beta, int eps,
                                        const QuadraticSpace& abelian_extra = QuadraticSpace()) {
  if (eps != 1 && eps != -1) throw PreconditionError("beta_semidirect: eps must be +1 or -1");
  if (beta.rows() != 2 * k || beta.cols() != 2 * k)
    throw PreconditionError("beta_semidirect: beta must be 2k x 2k");
  if (!beta.is_skew()) throw PreconditionError("beta_semidirect: beta is not skew");
  if (determinant(beta).is_zero()) throw PreconditionError("beta_semidirect: beta is singular");
  if (abelian_extra.dim() > 0 && !abelian_extra.nondegenerate())
    throw DegenerateMetricError("beta_semidirect: extra factor metric is degenerate");
  const std::size_t m = abelian_extra.dim();
  const std::size_t n = 1 + 4 * k + m;
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i <= 2 * k; ++i) names.push_back("w" + std::to_string(i));
  for (std::size_t i = 1; i <= 2 * k; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  LieAlgebra alg(n, std::move(names));
  for (std::size_t j = 0; j < 2 * k; ++j) {
    Vec v = zero_vec(n);
    for (std::size_t i = 0; i < 2 * k; ++i) v[1 + i] = beta(i, j);
    alg.set_bracket(0, 1 + 2 * k + j, std::move(v));
  }
  Matrix g(n, n);
  g(0, 0) = Rational(eps);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    g(1 + i, 1 + 2 * k + i) = Rational(1);
    g(1 + 2 * k + i, 1 + i) = Rational(1);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(1 + 4 * k + i, 1 + 4 * k + j) = abelian_extra.gram(i, j);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

/// Two-step nilpotent example on {E, F, Z, C} with [E,F] = Z, center
/// span{Z,C} totally isotropic and maximal for the split metric
/// <E,Z> = <F,C> = 1.
inline MetricLieAlgebra two_step_split_example() {
  LieAlgebra alg(4, {"E", "F", "Z", "C"});
  alg.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1), Rational(0)});
  Matrix g(4, 4);
  g(0, 2) = g(2, 0) = Rational(1);
  g(1, 3) = g(3, 1) = Rational(1);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

/// Abelian algebra with an arbitrary nondegenerate metric.
inline MetricLieAlgebra abelian_mla(const Matrix& gram, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= gram.rows(); ++i) names.push_back(prefix + std::to_string(i));
  return MetricLieAlgebra(LieAlgebra(gram.rows(), std::move(names)), PseudoMetric(gram));
}

/// Block-diagonal direct product of metric Lie algebras.
inline MetricLieAlgebra direct_product(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> names;
  for (const auto& s : a.algebra.basis_names()) names.push_back(s);
  for (const auto& s : b.algebra.basis_names()) {
    std::string t = s;
    // keep labels unique across factors
    bool clash = false;
    for (std::size_t i = 0; i < na; ++i) clash = clash || a.algebra.basis_names()[i] == t;
    if (clash) t += "'";
    names.push_back(t);
  }
  LieAlgebra alg(n, std::move(names));
  for (const auto& [ij, v] : a.algebra.structure()) {
    Vec ext = zero_vec(n);
    for (std::size_t c = 0; c < na; ++c) ext[c] = v[c];
    alg.set_bracket(ij.first, ij.second, std::move(ext));
  }
  for (const auto& [ij, v] : b.algebra.structure()) {
    Vec ext = zero_vec(n);
    for (std::size_t c = 0; c < nb; ++c) ext[na + c] = v[c];
    alg.set_bracket(na + ij.first, na + ij.second, std::move(ext));
  }
  Matrix g(n, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) g(i, j) = a.metric.gram(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) g(na + i, na + j) = b.metric.gram(i, j);
  return MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(g)));
}

}  // namespace metriclie
