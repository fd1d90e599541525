#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metriclie/matrix.hpp"

namespace metriclie {

/// A finite-dimensional vector space with a symmetric bilinear form.
struct QuadraticSpace {
  Matrix gram;

  QuadraticSpace() = default;
  explicit QuadraticSpace(Matrix g) : gram(std::move(g)) {}

  std::size_t dim() const { return gram.rows(); }

  Rational inner(const Vec& x, const Vec& y) const {
    Rational s(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!gram(i, j).is_zero() && !y[j].is_zero()) s += x[i] * gram(i, j) * y[j];
    }
    return s;
  }

  bool nondegenerate() const { return !determinant(gram).is_zero(); }
};

struct Signature {
  std::size_t positive = 0, negative = 0, radical = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric form by congruence diagonalization over the
/// rationals (simultaneous row/column operations).
inline Signature signature(const QuadraticSpace& space) {
  if (!space.gram.is_symmetric())
    throw MalformedInputError("signature: gram matrix is not symmetric");
  Matrix m = space.gram;
  const std::size_t n = m.rows();
  auto swap_rc = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  auto add_rc = [&](std::size_t dst, std::size_t src) {  // row/col dst += row/col src
    for (std::size_t j = 0; j < n; ++j) m(dst, j) += m(src, j);
    for (std::size_t i = 0; i < n; ++i) m(i, dst) += m(i, src);
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (m(c, c).is_zero()) {
      std::size_t d = c + 1;
      while (d < n && m(d, d).is_zero()) ++d;
      if (d < n) {
        swap_rc(c, d);
      } else {
        std::size_t k = c + 1;
        while (k < n && m(c, k).is_zero()) ++k;
        if (k == n) continue;  // row/col c already clean: radical direction
        add_rc(c, k);          // both diagonals zero, so new (c,c) = 2 m(c,k) != 0
      }
    }
    Rational pivot = m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / pivot;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(c, j);
      for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, c);
    }
  }
  Signature s;
  for (std::size_t i = 0; i < n; ++i) {
    int sg = m(i, i).sign();
    if (sg > 0)
      ++s.positive;
    else if (sg < 0)
      ++s.negative;
    else
      ++s.radical;
  }
  return s;
}

/// The unique A-dagger with <A x, y> = <x, A-dagger y>, obtained by solving
/// gram * A-dagger = A^T * gram.
inline Matrix adjoint_map(const Matrix& a, const QuadraticSpace& space) {
  LuSolver lu(space.gram);
  if (lu.singular())
    throw DegenerateMetricError("adjoint_map: gram matrix is degenerate, no adjoint exists");
  Matrix rhs = a.transpose() * space.gram;
  Matrix result(space.dim(), space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    Vec col = lu.solve(rhs.column(j));
    for (std::size_t i = 0; i < space.dim(); ++i) result(i, j) = col[i];
  }
  return result;
}

/// True iff the span of the given vectors pairs to zero with itself.
inline bool is_totally_isotropic(const std::vector<Vec>& vectors, const QuadraticSpace& space) {
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = a; b < vectors.size(); ++b)
      if (!space.inner(vectors[a], vectors[b]).is_zero()) return false;
  return true;
}

/// Witt decomposition data: W totally isotropic, its dual partner, and the
/// nondegenerate complement of the hyperbolic block.
struct WittData {
  std::vector<Vec> isotropic_basis;       // W, as supplied (independent subset)
  std::vector<Vec> dual_isotropic_basis;  // W~ with <e_i, e~_j> = delta_ij
  std::vector<Vec> orthogonal_complement; // (W + W~)^perp
};

/// Completes a totally isotropic subspace to hyperbolic pairs, one dual
/// vector at a time. Each dual is the particular RREF solution of the
/// pairing constraints (lowest-index pivots, free variables zero), then
/// corrected to be isotropic.
inline WittData witt_decomposition(const QuadraticSpace& space, const std::vector<Vec>& isotropic) {
  if (!space.gram.is_symmetric())
    throw MalformedInputError("witt_decomposition: gram matrix is not symmetric");
  if (!space.nondegenerate())
    throw DegenerateMetricError("witt_decomposition: ambient space is degenerate");
  if (!is_totally_isotropic(isotropic, space))
    throw PreconditionError("witt_decomposition: input subspace is not totally isotropic");

  const std::size_t n = space.dim();
  // reduce the generators to an independent list, keeping the earliest ones
  std::vector<Vec> w;
  for (const auto& v : isotropic) {
    if (subspace_contains(w, v, n)) continue;
    w.push_back(v);
  }
  WittData out;
  out.isotropic_basis = w;
  const std::size_t k = w.size();
  for (std::size_t j = 0; j < k; ++j) {
    // constraints: <w_i, v> = delta_ij for all i, <dual_m, v> = 0 for m < j
    Matrix sys(k + j, n);
    Vec rhs = zero_vec(k + j);
    for (std::size_t i = 0; i < k; ++i) {
      Vec row = mat_vec(space.gram, w[i]);
      for (std::size_t c = 0; c < n; ++c) sys(i, c) = row[c];
      rhs[i] = (i == j) ? Rational(1) : Rational(0);
    }
    for (std::size_t m = 0; m < j; ++m) {
      Vec row = mat_vec(space.gram, out.dual_isotropic_basis[m]);
      for (std::size_t c = 0; c < n; ++c) sys(k + m, c) = row[c];
    }
    auto v = solve_linear(sys, rhs);
    if (!v)
      throw PreconditionError("witt_decomposition: hyperbolic completion failed (degenerate pairing)");
    // make the dual vector isotropic; pairings with W and earlier duals survive
    Vec dual = *v - (half() * space.inner(*v, *v)) * w[j];
    out.dual_isotropic_basis.push_back(std::move(dual));
  }
  // complement: common kernel of pairings with W and W~
  Matrix pairings(2 * k, n);
  for (std::size_t i = 0; i < k; ++i) {
    Vec rw = mat_vec(space.gram, w[i]);
    Vec rd = mat_vec(space.gram, out.dual_isotropic_basis[i]);
    for (std::size_t c = 0; c < n; ++c) {
      pairings(i, c) = rw[c];
      pairings(k + i, c) = rd[c];
    }
  }
  out.orthogonal_complement = kernel_basis(pairings);  // k = 0 yields the whole space
  return out;
}

/// Smallest k with A^k = 0, searched up to the dimension (Cayley-Hamilton
/// bound); absent when A is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const Matrix& a) {
  if (!a.is_square()) throw MalformedInputError("nilpotency_index: matrix is not square");
  Matrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

/// Change of basis rendering every family member strictly upper triangular,
/// built by iterated common-kernel extraction; absent when impossible.
inline std::optional<Matrix> simultaneous_strict_triangularization(
    const std::vector<Matrix>& family) {
  if (family.empty()) return Matrix();
  const std::size_t n = family.front().rows();
  for (const auto& m : family)
    if (!m.is_square() || m.rows() != n)
      throw MalformedInputError("simultaneous triangularization: dimension mismatch");

  // flag chain: V_{t+1} = {v : A v in V_t for all A}; columns of the output
  // follow the chain, so images always land in strictly earlier columns
  std::vector<Vec> chain;  // grows to a full basis, ordered by chain step
  std::vector<Vec> current;  // basis of V_t
  while (current.size() < n) {
    // solve: for each A, A v in span(current)
    // unknowns: v (n) plus coefficients in span(current) per A -> use kernel of
    // the projection-free formulation: stack (A v) modulo span(current) = 0.
    // Compute a matrix Q whose kernel is span(current)^0-complement: instead,
    // test membership by augmenting with the span's RREF residual map.
    std::vector<Vec> cur_canon = subspace_canonical(current, n);
    // residual projector rows: vectors y with y . x = 0 for all x in current
    // give linear functionals vanishing on the span
    Matrix span_rows = Matrix::from_rows(cur_canon, n);
    std::vector<Vec> annihilator = kernel_basis(span_rows);  // functionals via dot product
    std::size_t fcount = annihilator.size();
    Matrix sys(family.size() * fcount, n);
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t f = 0; f < fcount; ++f)
        for (std::size_t c = 0; c < n; ++c) {
          Rational s(0);
          for (std::size_t r = 0; r < n; ++r) s += annihilator[f][r] * family[a](r, c);
          sys(a * fcount + f, c) = s;
        }
    std::vector<Vec> next = fcount == 0 ? std::vector<Vec>{} : kernel_basis(sys);
    std::vector<Vec> next_canon = subspace_canonical(next, n);
    if (next_canon.size() <= cur_canon.size()) return std::nullopt;  // chain stalled
    // extend the adapted basis by vectors of V_{t+1} outside V_t
    std::vector<Vec> extended = cur_canon;
    for (const auto& v : next_canon) {
      if (subspace_contains(extended, v, n)) continue;
      extended.push_back(v);
      chain.push_back(v);
    }
    current = next_canon;
  }
  return Matrix::from_columns(chain, n);
}

}  // namespace metriclie
