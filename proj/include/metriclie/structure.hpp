#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "metriclie/connection.hpp"

namespace metriclie {

struct AssociativityReport {
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> witness;  // lexicographically first failure
  Vec left_value;   // (e_i * e_j) * e_k at the witness
  Vec right_value;  // e_i * (e_j * e_k) at the witness
};

/// Checks (e_i * e_j) * e_k = e_i * (e_j * e_k) on all basis triples.
inline AssociativityReport is_associative(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = zero_vec(n), ei = zero_vec(n);
        ek[k] = Rational(1);
        ei[i] = Rational(1);
        Vec left = u.apply(u.coeff(i, j), ek);
        Vec right = u.apply(ei, u.coeff(j, k));
        if (left != right) return {false, std::array<std::size_t, 3>{i, j, k}, left, right};
      }
  return {};
}

/// Solves the linear system unit * e_i = e_i for all i; absent when the
/// system is inconsistent. Metric-sourced products never have one.
inline std::optional<Vec> find_unit(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  if (n == 0) return std::nullopt;
  Matrix sys(n * n, n);
  Vec rhs = zero_vec(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      // sum_c x_c <coeff(c, i)>_k = delta_{ik}
      for (std::size_t c = 0; c < n; ++c) sys(i * n + k, c) = u.coeff(c, i)[k];
      rhs[i * n + k] = (i == k) ? Rational(1) : Rational(0);
    }
  return solve_linear(sys, rhs);
}

inline bool is_unimodular_product(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = Rational(1);
    if (!trace(left_mult_matrix(u, ei)).is_zero()) return false;
  }
  return true;
}

/// Class membership: the (1,2)-metric trace of theta vanishes.
inline bool in_class_w0(const MetricLieAlgebra& mla) {
  return is_zero_vec(trace_12(theta_tensor(mla), mla.space()));
}

/// Equivariant embedding of a covector into the theta-symmetry space:
/// iota(alpha)(x,y,z) = 2<x,y>alpha(z) - <x,z>alpha(y) - <y,z>alpha(x).
inline Tensor3 iota(const Vec& alpha, const QuadraticSpace& space) {
  const std::size_t n = space.dim();
  if (n < 2) throw PreconditionError("iota: requires dimension >= 2");
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t.at(i, j, k) = Rational(2) * space.gram(i, j) * alpha[k] - space.gram(i, k) * alpha[j] -
                        space.gram(j, k) * alpha[i];
  return t;
}

/// dim of the space of 3-tensors with partial symmetry and cyclic identity.
inline std::size_t dim_w(std::size_t n) { return n * (n * n - 1) / 3; }

struct WeylComponents {
  Tensor3 traceless;    // theta_0, with vanishing (1,2)-trace
  Vec vector_part;      // alpha = trace_12(t) / (2(n-1)); t = theta_0 + iota(alpha)
  std::size_t dim_w_formula = 0;
};

/// Splits t into its traceless part and the embedded covector component.
inline WeylComponents weyl_decompose(const Tensor3& t, const QuadraticSpace& space) {
  const std::size_t n = t.dim();
  if (n < 2) throw PreconditionError("weyl_decompose: requires dimension >= 2");
  if (!t.is_partially_symmetric())
    throw PreconditionError("weyl_decompose: tensor is not symmetric in its first two slots");
  if (!check_cyclic(t).holds)
    throw PreconditionError("weyl_decompose: tensor violates the cyclic identity");
  Vec tr = trace_12(t, space);
  Rational scale = Rational(1) / Rational(2 * (static_cast<long long>(n) - 1));
  Vec alpha = scale * tr;
  WeylComponents out;
  out.vector_part = alpha;
  out.traceless = t - iota(alpha, space);
  out.dim_w_formula = dim_w(n);
  return out;
}

/// Right-nested k-th power of x under the symmetric product. Powers of
/// order >= 3 are only well-defined for associative products.
inline Vec power(const SymmetricProduct& u, const Vec& x, std::size_t k) {
  if (k == 0) throw PreconditionError("power: exponent must be >= 1");
  if (k >= 3 && !is_associative(u).associative)
    throw PreconditionError("power: exponent >= 3 requires an associative product");
  Vec r = x;
  for (std::size_t i = 1; i < k; ++i) r = u.apply(x, r);
  return r;
}

namespace detail {

/// Span of all k-fold products, iterated: P_1 = g, P_{k+1} = span(e_i * P_k).
/// Returns the chain of canonical bases until it stabilizes or vanishes.
inline std::vector<std::vector<Vec>> product_power_chain(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  std::vector<Vec> current;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = Rational(1);
    current.push_back(std::move(e));
  }
  std::vector<std::vector<Vec>> chain{current};
  while (true) {
    std::vector<Vec> next_gens;
    for (std::size_t i = 0; i < n; ++i) {
      Vec ei = zero_vec(n);
      ei[i] = Rational(1);
      for (const auto& v : chain.back()) next_gens.push_back(u.apply(ei, v));
    }
    std::vector<Vec> next = subspace_canonical(next_gens, n);
    if (next.size() == chain.back().size() && !next.empty()) {
      chain.push_back(next);
      return chain;  // stabilized nonzero: not nilpotent
    }
    chain.push_back(next);
    if (next.empty()) return chain;
  }
}

}  // namespace detail

/// Smallest N such that every product of N factors vanishes (the zero
/// product has index 2); absent when the product is not nilpotent.
/// Cross-checked against simultaneous strict triangularization of the
/// left-multiplication family.
inline std::optional<std::size_t> product_nilpotency(const SymmetricProduct& u) {
  if (!is_associative(u).associative)
    throw PreconditionError("product_nilpotency: product is not associative");
  const std::size_t n = u.dim();
  std::vector<Matrix> lefts;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = Rational(1);
    lefts.push_back(left_mult_matrix(u, ei));
  }
  bool triangularizable = simultaneous_strict_triangularization(lefts).has_value();
  auto chain = detail::product_power_chain(u);
  bool vanishes = chain.back().empty();
  if (!vanishes) {
    if (triangularizable && n > 0)
      throw Error("product_nilpotency: internal disagreement between routes");
    return std::nullopt;
  }
  if (!triangularizable && n > 0)
    throw Error("product_nilpotency: internal disagreement between routes");
  return chain.size();  // chain = [P_1, ..., P_N = 0]; index = N
}

/// {X : X * Y = 0 for all Y}: null space of the stacked right-multiplication
/// matrices (equal to the left ones by symmetry).
inline std::vector<Vec> annihilator(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + k, c) = u.coeff(c, j)[k];
  return kernel_basis(stacked);
}

}  // namespace metriclie
