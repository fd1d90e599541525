#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metriclie/families.hpp"
#include "metriclie/structure.hpp"

namespace metriclie {

// ---------------------------------------------------------------------------
// Two-step nilpotent analysis

enum class CenterMetricStatus { Nondegenerate, TotallyIsotropic, Mixed };

inline const char* to_string(CenterMetricStatus s) {
  switch (s) {
    case CenterMetricStatus::Nondegenerate: return "Nondegenerate";
    case CenterMetricStatus::TotallyIsotropic: return "TotallyIsotropic";
    default: return "Mixed";
  }
}

struct TwoStepReport {
  std::vector<Vec> center_basis;
  CenterMetricStatus center_metric_status = CenterMetricStatus::Mixed;
  std::vector<Vec> complement_basis;  // center^perp when the restriction is nondegenerate
  std::vector<Matrix> j_operators;    // one per center basis vector, on complement coordinates
  bool j_compositions_vanish = true;  // J_Z o J_Z~ = 0 for all pairs (forced by associativity)
  bool associative = false;
  std::optional<std::array<Vec, 3>> witness;  // (x,y,z) with (x*y)*z != x*(y*z)
  std::string verdict;
};

inline bool is_two_step_nilpotent(const LieAlgebra& alg) {
  auto derived = derived_subalgebra(alg);
  if (derived.empty()) return false;  // abelian
  const std::size_t n = alg.dim();
  for (std::size_t b = 0; b < n; ++b) {
    Vec eb = zero_vec(n);
    eb[b] = Rational(1);
    for (const auto& d : derived)
      if (!is_zero_vec(alg.bracket(eb, d))) return false;
  }
  return true;
}

inline CenterMetricStatus classify_center_metric(const Matrix& restricted_gram) {
  if (restricted_gram.rows() == 0) return CenterMetricStatus::Nondegenerate;
  if (restricted_gram.is_zero()) return CenterMetricStatus::TotallyIsotropic;
  if (!determinant(restricted_gram).is_zero()) return CenterMetricStatus::Nondegenerate;
  return CenterMetricStatus::Mixed;
}

namespace detail {

inline Matrix restricted_gram(const MetricLieAlgebra& mla, const std::vector<Vec>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = mla.inner(basis[i], basis[j]);
  return g;
}

/// Basis of {x : <x, v> = 0 for all v in basis}.
inline std::vector<Vec> orthogonal_complement(const MetricLieAlgebra& mla,
                                              const std::vector<Vec>& basis) {
  Matrix pairings(basis.size(), mla.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vec row = mat_vec(mla.metric.gram, basis[i]);
    for (std::size_t c = 0; c < mla.dim(); ++c) pairings(i, c) = row[c];
  }
  return kernel_basis(pairings);
}

}  // namespace detail

/// Kaplan operators J_Z on the complement of the center, defined by
/// <J_Z E, F> = <Z, [E,F]>, one per center basis vector.
inline TwoStepReport kaplan_operators(const MetricLieAlgebra& mla) {
  if (!is_two_step_nilpotent(mla.algebra) && !derived_subalgebra(mla.algebra).empty())
    throw PreconditionError("kaplan_operators: algebra is not nilpotent of step <= 2");
  TwoStepReport rep;
  rep.center_basis = center(mla.algebra);
  Matrix gz = detail::restricted_gram(mla, rep.center_basis);
  rep.center_metric_status = classify_center_metric(gz);
  if (rep.center_metric_status != CenterMetricStatus::Nondegenerate)
    throw DegenerateMetricError(
        "kaplan_operators: metric restricted to the center is degenerate; "
        "use two_step_analysis for the isotropic-center branches");
  rep.complement_basis = detail::orthogonal_complement(mla, rep.center_basis);
  const std::size_t m = rep.complement_basis.size();
  Matrix gv = detail::restricted_gram(mla, rep.complement_basis);
  LuSolver lu(gv);
  if (m > 0 && lu.singular())
    throw DegenerateMetricError("kaplan_operators: complement metric is degenerate");
  for (const auto& z : rep.center_basis) {
    Matrix j(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      Vec rhs(m);
      for (std::size_t b = 0; b < m; ++b)
        rhs[b] = mla.inner(z, mla.algebra.bracket(rep.complement_basis[a], rep.complement_basis[b]));
      Vec col = m > 0 ? lu.solve(rhs) : Vec{};
      for (std::size_t r = 0; r < m; ++r) j(r, a) = col[r];
    }
    rep.j_operators.push_back(std::move(j));
  }
  return rep;
}

/// Structural analysis of a non-abelian 2-step nilpotent metric Lie algebra.
inline TwoStepReport two_step_analysis(const MetricLieAlgebra& mla) {
  if (derived_subalgebra(mla.algebra).empty())
    throw PreconditionError("two_step_analysis: algebra is abelian, not 2-step nilpotent");
  if (!is_two_step_nilpotent(mla.algebra))
    throw PreconditionError("two_step_analysis: algebra is not 2-step nilpotent");
  TwoStepReport rep;
  rep.center_basis = center(mla.algebra);
  Matrix gz = detail::restricted_gram(mla, rep.center_basis);
  rep.center_metric_status = classify_center_metric(gz);
  SymmetricProduct u = u_tensor(mla);
  AssociativityReport assoc = is_associative(u);
  rep.associative = assoc.associative;
  const std::size_t n = mla.dim();
  if (!assoc.associative && assoc.witness) {
    std::array<Vec, 3> w{zero_vec(n), zero_vec(n), zero_vec(n)};
    w[0][(*assoc.witness)[0]] = Rational(1);
    w[1][(*assoc.witness)[1]] = Rational(1);
    w[2][(*assoc.witness)[2]] = Rational(1);
    rep.witness = w;
  }

  if (rep.center_metric_status == CenterMetricStatus::Nondegenerate) {
    TwoStepReport kap = kaplan_operators(mla);
    rep.complement_basis = kap.complement_basis;
    rep.j_operators = kap.j_operators;
    // associativity forces J_Z o J_Z~ = 0; a nonzero composition gives an
    // explicit witness: Z * (Z~ * E) = 1/4 J_Z J_Z~ E while (Z * Z~) * E = 0
    for (std::size_t a = 0; a < rep.j_operators.size(); ++a)
      for (std::size_t b = 0; b < rep.j_operators.size(); ++b) {
        Matrix comp = rep.j_operators[a] * rep.j_operators[b];
        if (comp.is_zero()) continue;
        rep.j_compositions_vanish = false;
        if (rep.witness) continue;
        for (std::size_t c = 0; c < rep.complement_basis.size(); ++c) {
          if (is_zero_vec(comp.column(c))) continue;
          rep.witness = std::array<Vec, 3>{rep.center_basis[a], rep.center_basis[b],
                                           rep.complement_basis[c]};
          break;
        }
      }
    rep.verdict = rep.associative
                      ? "nondegenerate center with abelian structure"
                      : "nondegenerate center: Kaplan operator compositions obstruct associativity";
    return rep;
  }

  if (rep.center_metric_status == CenterMetricStatus::TotallyIsotropic) {
    Signature sig = signature(mla.space());
    bool split = sig.positive == sig.negative && sig.radical == 0;
    bool maximal = rep.center_basis.size() == sig.positive;
    if (split && maximal) {
      // the center annihilates and triple products vanish; record both checks
      bool center_annihilates = true;
      auto ann = annihilator(u);
      for (const auto& z : rep.center_basis)
        center_annihilates = center_annihilates && subspace_contains(ann, z, n);
      bool triples_vanish = true;
      for (std::size_t i = 0; i < n && triples_vanish; ++i)
        for (std::size_t j = 0; j < n && triples_vanish; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            Vec ek = zero_vec(n);
            ek[k] = Rational(1);
            if (!is_zero_vec(u.apply(u.coeff(i, j), ek))) {
              triples_vanish = false;
              break;
            }
          }
      rep.verdict = center_annihilates && triples_vanish && rep.associative
                        ? "maximally isotropic center with split metric: associative, step <= 2"
                        : "maximally isotropic center but verification failed";
      return rep;
    }
    rep.verdict = std::string("totally isotropic center but hypothesis fails (") +
                  (split ? "" : "metric not split; ") + (maximal ? "" : "center not maximal; ") +
                  "direct verdict: " + (rep.associative ? "associative" : "not associative") + ")";
    return rep;
  }

  rep.verdict = std::string("mixed center metric, no theorem applies; direct verdict: ") +
                (rep.associative ? "associative" : "not associative");
  return rep;
}

// ---------------------------------------------------------------------------
// Almost-abelian classification

enum class AlmostAbelianBranch { NotAssociative, Heisenberg, Beta };

inline const char* to_string(AlmostAbelianBranch b) {
  switch (b) {
    case AlmostAbelianBranch::NotAssociative: return "NotAssociative";
    case AlmostAbelianBranch::Heisenberg: return "Heisenberg";
    default: return "Beta";
  }
}

enum class AssocCondition { A, B, C };

inline const char* to_string(AssocCondition c) {
  switch (c) {
    case AssocCondition::A: return "A";
    case AssocCondition::B: return "B";
    default: return "C";
  }
}

struct ConditionViolation {
  AssocCondition condition;
  std::array<Vec, 3> triple;  // ambient vectors (x, y, z) with (x*y)*z != x*(y*z)
  Vec left_value, right_value;
};

struct AlmostAbelianData {
  std::vector<Vec> ideal_basis;  // canonical basis of the abelian ideal
  Vec unit_normal;               // e with <e,e> = eps
  int eps = 1;
  Matrix t_map, t_dagger, s_part, a_part;  // operators on ideal coordinates
};

struct HeisenbergNormalForm {
  Vec e_vec, f_vec, z_vec;  // Heisenberg triple in input coordinates
  Vec u, z;                 // rank-one data of T-dagger, input coordinates
  Rational t_scalar;        // u = t z
  std::vector<Vec> central_complement;
};

struct BetaNormalForm {
  std::vector<Vec> w_basis;       // Im(T), input coordinates
  std::vector<Vec> w_dual_basis;  // Witt duals, input coordinates
  Matrix beta;                    // in the (dual, image) bases; skew and invertible
  std::vector<Vec> complement;    // Witt complement inside the ideal
};

struct ClassificationReport {
  AlmostAbelianBranch branch = AlmostAbelianBranch::NotAssociative;
  AlmostAbelianData data;
  std::optional<ConditionViolation> violation;
  std::optional<HeisenbergNormalForm> heisenberg;
  std::optional<BetaNormalForm> beta;
  std::optional<MetricLieAlgebra> normal_form;
  std::optional<LinearMapBetweenAlgebras> isomorphism;  // source: normal form, target: input
};

namespace detail {

inline Vec embed(const std::vector<Vec>& basis, const Vec& coords, std::size_t n) {
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + coords[i] * basis[i];
  return out;
}

}  // namespace detail

/// Classifies an almost-abelian metric Lie algebra with the given
/// nondegenerate abelian codimension-one ideal, following the S != 0
/// (Heisenberg) and S = 0 (beta-extension) branches.
inline ClassificationReport classify_almost_abelian(const MetricLieAlgebra& mla,
                                                    const std::vector<Vec>& ideal) {
  const std::size_t n = mla.dim();
  ClassificationReport rep;
  std::vector<Vec> a_basis = subspace_canonical(ideal, n);
  if (a_basis.size() != n - 1)
    throw PreconditionError("classify_almost_abelian: ideal is not of codimension one");
  if (!is_abelian_ideal(mla.algebra, a_basis))
    throw PreconditionError("classify_almost_abelian: subspace is not an abelian ideal");
  Matrix gram_a = detail::restricted_gram(mla, a_basis);
  if (determinant(gram_a).is_zero())
    throw PreconditionError("classify_almost_abelian: metric degenerates on the ideal");

  // unit normal: the orthogonal line is 1-dimensional and anisotropic
  std::vector<Vec> perp = detail::orthogonal_complement(mla, a_basis);
  if (perp.size() != 1)
    throw PreconditionError("classify_almost_abelian: orthogonal complement is not a line");
  Vec v = perp.front();
  Rational vv = mla.inner(v, v);
  int eps = vv.sign();
  Rational root;
  if (!vv.abs().is_square(&root))
    throw PreconditionError(
        "classify_almost_abelian: cannot normalize the orthogonal direction over the rationals "
        "(<v,v> = " + vv.to_string() + " is not +-(square))");
  Vec e_unit = (Rational(1) / root) * v;

  // T = ad_e restricted to the ideal, in ideal coordinates
  const std::size_t m = n - 1;
  Matrix t_map(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = mla.algebra.bracket(e_unit, a_basis[j]);
    auto coords = coordinates_in_span(a_basis, img);
    if (!coords)
      throw PreconditionError("classify_almost_abelian: ad_e does not preserve the ideal");
    for (std::size_t i = 0; i < m; ++i) t_map(i, j) = (*coords)[i];
  }
  if (t_map.is_zero())
    throw PreconditionError("classify_almost_abelian: algebra is abelian, not almost-abelian");
  QuadraticSpace space_a(gram_a);
  Matrix t_dag = adjoint_map(t_map, space_a);
  Matrix s = half() * (t_map + t_dag);
  Matrix a_skew = half() * (t_map - t_dag);
  rep.data = AlmostAbelianData{a_basis, e_unit, eps, t_map, t_dag, s, a_skew};

  SymmetricProduct u = u_tensor(mla);
  auto record_violation = [&](AssocCondition cond, const Vec& x, const Vec& y, const Vec& z) {
    ConditionViolation viol;
    viol.condition = cond;
    viol.triple = {x, y, z};
    viol.left_value = u.apply(u.apply(x, y), z);
    viol.right_value = u.apply(x, u.apply(y, z));
    rep.violation = std::move(viol);
    rep.branch = AlmostAbelianBranch::NotAssociative;
  };

  // condition A: T-dagger squared vanishes
  Matrix td2 = t_dag * t_dag;
  if (!td2.is_zero()) {
    for (std::size_t j = 0; j < m; ++j)
      if (!is_zero_vec(td2.column(j))) {
        record_violation(AssocCondition::A, e_unit, e_unit, a_basis[j]);
        return rep;
      }
  }
  // condition B: S T-dagger vanishes
  Matrix std_ = s * t_dag;
  if (!std_.is_zero()) {
    for (std::size_t p = 0; p < m && !rep.violation; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vec img = detail::embed(a_basis, std_.column(p), n);
        if (!mla.inner(img, a_basis[q]).is_zero()) {
          // wrap as the associator pattern (e * a_p) * a_q vs e * (a_p * a_q)
          record_violation(AssocCondition::B, e_unit, a_basis[p], a_basis[q]);
          break;
        }
      }
    if (rep.violation) return rep;
  }
  // condition C: <S W, X> T-dagger Y = <S Y, X> T-dagger W on the ideal
  Matrix gs = gram_a * s;  // (gs)_{xp} = <a_x, S a_p>
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = p + 1; r < m; ++r)
      for (std::size_t q = 0; q < m; ++q) {
        Vec lhs = gs(q, p) * t_dag.column(r);
        Vec rhs = gs(q, r) * t_dag.column(p);
        if (lhs != rhs) {
          record_violation(AssocCondition::C, a_basis[p], a_basis[q], a_basis[r]);
          return rep;
        }
      }

  // associative; branch on the symmetric part
  if (!s.is_zero()) {
    // S != 0: T-dagger has rank one, T-dagger W = <W, z> u with u = t z
    rep.branch = AlmostAbelianBranch::Heisenberg;
    std::size_t j0 = m;
    for (std::size_t j = 0; j < m && j0 == m; ++j)
      if (!is_zero_vec(t_dag.column(j))) j0 = j;
    if (j0 == m) throw Error("classify_almost_abelian: S != 0 but T-dagger = 0");
    Vec u_a = t_dag.column(j0);
    // factors mu_j with T-dagger a_j = mu_j u
    std::size_t comp = 0;
    while (u_a[comp].is_zero()) ++comp;
    Vec mu(m);
    for (std::size_t j = 0; j < m; ++j) {
      mu[j] = t_dag(comp, j) / u_a[comp];
      if (t_dag.column(j) != mu[j] * u_a)
        throw Error("classify_almost_abelian: T-dagger is not rank one despite conditions");
    }
    LuSolver lu_a(gram_a);
    Vec z_a = lu_a.solve(mu);  // <a_j, z> = mu_j
    std::size_t zc = 0;
    while (z_a[zc].is_zero()) ++zc;
    Rational t_scalar = u_a[zc] / z_a[zc];
    if (u_a != t_scalar * z_a)
      throw Error("classify_almost_abelian: u and z are not proportional despite conditions");
    // f: pair to 1 with u, then shift to a null vector
    Vec pair_u = mat_vec(gram_a, u_a);  // <a_p, u>
    std::size_t p0 = 0;
    while (pair_u[p0].is_zero()) ++p0;
    Vec f_a = zero_vec(m);
    f_a[p0] = Rational(1) / pair_u[p0];
    Rational ff = space_a.inner(f_a, f_a);
    f_a = f_a - (half() * ff) * u_a;

    HeisenbergNormalForm nf;
    nf.e_vec = e_unit;
    nf.u = detail::embed(a_basis, u_a, n);
    nf.z = detail::embed(a_basis, z_a, n);
    nf.t_scalar = t_scalar;
    nf.f_vec = detail::embed(a_basis, f_a, n);
    nf.z_vec = mla.algebra.bracket(e_unit, nf.f_vec);  // = T f = z
    std::vector<Vec> h_span{nf.e_vec, nf.f_vec, nf.z_vec};
    nf.central_complement = detail::orthogonal_complement(mla, h_span);
    for (const auto& w : nf.central_complement)
      if (!mla.algebra.ad_matrix(w).is_zero())
        throw Error("classify_almost_abelian: Heisenberg complement is not central");

    // explicit isometric isomorphism onto heisenberg_lorentzian(eps) x complement
    Rational sqrt_abs_t;
    if (!t_scalar.abs().is_square(&sqrt_abs_t))
      throw PreconditionError(
          "classify_almost_abelian: Heisenberg scaling |t| = " + t_scalar.abs().to_string() +
          " is not a rational square; the isometry needs an irrational stretch");
    Rational sigma(t_scalar.sign());
    Matrix gram_v = detail::restricted_gram(mla, nf.central_complement);
    if (gram_v.rows() > 0 && determinant(gram_v).is_zero())
      throw Error("classify_almost_abelian: Heisenberg complement metric is degenerate");
    MetricLieAlgebra normal = direct_product(heisenberg_lorentzian(eps), abelian_mla(gram_v));
    std::vector<Vec> cols;
    cols.push_back(sigma * nf.e_vec);
    cols.push_back(sqrt_abs_t * nf.f_vec);
    cols.push_back((sigma * sqrt_abs_t) * nf.z_vec);
    for (const auto& w : nf.central_complement) cols.push_back(w);
    rep.heisenberg = std::move(nf);
    rep.normal_form = normal;
    rep.isomorphism = LinearMapBetweenAlgebras{normal, mla, Matrix::from_columns(cols, n)};
    return rep;
  }

  // S = 0: T is skew; W = Im(T) is even-dimensional totally isotropic
  rep.branch = AlmostAbelianBranch::Beta;
  std::vector<Vec> w_cols;
  for (std::size_t j = 0; j < m; ++j) w_cols.push_back(t_map.column(j));
  std::vector<Vec> w_a = subspace_canonical(w_cols, m);
  const std::size_t twok = w_a.size();
  if (twok % 2 != 0)
    throw Error("classify_almost_abelian: Im(T) of a skew map has odd dimension");
  if (!is_totally_isotropic(w_a, space_a))
    throw Error("classify_almost_abelian: Im(T) is not totally isotropic despite conditions");
  WittData witt = witt_decomposition(space_a, w_a);
  Matrix beta(twok, twok);
  for (std::size_t j = 0; j < twok; ++j) {
    Vec img = mat_vec(t_map, witt.dual_isotropic_basis[j]);
    auto coords = coordinates_in_span(w_a, img);
    if (!coords) throw Error("classify_almost_abelian: T does not map the Witt duals into W");
    for (std::size_t i = 0; i < twok; ++i) beta(i, j) = (*coords)[i];
  }
  if (!beta.is_skew() || determinant(beta).is_zero())
    throw Error("classify_almost_abelian: recovered beta is not skew invertible");
  // sanity: T annihilates W and the Witt complement
  for (const auto& w : w_a)
    if (!is_zero_vec(mat_vec(t_map, w)))
      throw Error("classify_almost_abelian: T does not annihilate its image");
  for (const auto& c : witt.orthogonal_complement)
    if (!is_zero_vec(mat_vec(t_map, c)))
      throw Error("classify_almost_abelian: T does not annihilate the Witt complement");

  BetaNormalForm nf;
  for (const auto& w : w_a) nf.w_basis.push_back(detail::embed(a_basis, w, n));
  for (const auto& w : witt.dual_isotropic_basis)
    nf.w_dual_basis.push_back(detail::embed(a_basis, w, n));
  for (const auto& c : witt.orthogonal_complement)
    nf.complement.push_back(detail::embed(a_basis, c, n));
  nf.beta = beta;

  Matrix gram_u(witt.orthogonal_complement.size(), witt.orthogonal_complement.size());
  for (std::size_t i = 0; i < witt.orthogonal_complement.size(); ++i)
    for (std::size_t j = 0; j < witt.orthogonal_complement.size(); ++j)
      gram_u(i, j) = space_a.inner(witt.orthogonal_complement[i], witt.orthogonal_complement[j]);
  MetricLieAlgebra normal = beta_semidirect(twok / 2, beta, eps, QuadraticSpace(gram_u));
  std::vector<Vec> cols;
  cols.push_back(e_unit);
  for (const auto& w : nf.w_basis) cols.push_back(w);
  for (const auto& w : nf.w_dual_basis) cols.push_back(w);
  for (const auto& c : nf.complement) cols.push_back(c);
  rep.beta = std::move(nf);
  rep.normal_form = normal;
  rep.isomorphism = LinearMapBetweenAlgebras{normal, mla, Matrix::from_columns(cols, n)};
  return rep;
}

// ---------------------------------------------------------------------------
// Abelian hyperplane detection

struct HyperplaneCandidates {
  std::vector<std::vector<Vec>> candidates;  // canonical bases of valid ideals
  bool unique_codim1_ideal = true;  // false exactly in the h3 x R^k degeneracy
  bool exhaustive = true;           // false when the candidate family is infinite or capped
};

/// Best-effort search for nondegenerate abelian hyperplane ideals: spans of
/// the derived subalgebra extended by center and coordinate vectors.
inline HyperplaneCandidates detect_abelian_hyperplane(const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  HyperplaneCandidates out;
  std::vector<Vec> derived = derived_subalgebra(mla.algebra);
  std::vector<Vec> zcenter = center(mla.algebra);

  // h3 x R^k degeneracy: 2-step nilpotent, one-dimensional derived algebra,
  // center of codimension two
  bool h3_pattern = is_two_step_nilpotent(mla.algebra) && derived.size() == 1 &&
                    zcenter.size() == n - 2;
  out.unique_codim1_ideal = !h3_pattern;

  if (derived.size() == n) return out;  // perfect algebra: no hyperplane contains [g,g]
  if (n - derived.size() > 1) out.exhaustive = false;  // infinite hyperplane family upstream

  std::vector<Vec> gens = zcenter;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = Rational(1);
    gens.push_back(std::move(e));
  }
  const std::size_t need = n - 1;
  std::vector<std::vector<Vec>> seen;
  std::vector<std::size_t> pick;
  std::size_t budget = 4096;
  auto consider = [&](const std::vector<Vec>& span_vecs) {
    auto canon = subspace_canonical(span_vecs, n);
    if (canon.size() != need) return;
    for (const auto& s : seen)
      if (s == canon) return;
    seen.push_back(canon);
    if (!is_abelian_ideal(mla.algebra, canon)) return;
    if (determinant(detail::restricted_gram(mla, canon)).is_zero()) return;
    out.candidates.push_back(canon);
  };
  // enumerate subsets of generators extending the derived subalgebra
  std::vector<Vec> base = derived;
  auto rec = [&](auto&& self, std::size_t start, std::vector<Vec>& acc) -> void {
    if (budget == 0) return;
    --budget;
    auto canon = subspace_canonical(acc, n);
    if (canon.size() == need) {
      consider(acc);
      return;
    }
    if (canon.size() > need || start == gens.size()) return;
    for (std::size_t i = start; i < gens.size(); ++i) {
      if (subspace_contains(canon, gens[i], n)) continue;
      acc.push_back(gens[i]);
      self(self, i + 1, acc);
      acc.pop_back();
      if (budget == 0) return;
    }
  };
  rec(rec, 0, base);
  if (budget == 0) out.exhaustive = false;
  return out;
}

}  // namespace metriclie
