#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "metriclie/structure.hpp"

namespace metriclie {

/// Polynomial solution X(t) = sum_k A_k t^k of the reduced geodesic
/// equation, with A_k = (-1)^k X0^{k+1}.
struct GeodesicPolynomial {
  std::vector<Vec> coefficients;  // index k = 0..N
  Vec initial;

  Vec evaluate(const Rational& t) const {
    Vec r = zero_vec(initial.size());
    Rational tk(1);
    for (const auto& a : coefficients) {
      r = r + tk * a;
      tk *= t;
    }
    return r;
  }

  std::vector<double> evaluate_double(double t) const {
    std::vector<double> r(initial.size(), 0.0);
    double tk = 1.0;
    for (const auto& a : coefficients) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += tk * a[i].to_double();
      tk *= t;
    }
    return r;
  }
};

/// Truncated power-series solution of X' + X * X = 0 for a nilpotent
/// associative product. The truncation is tight: the next coefficient
/// vanishes.
inline GeodesicPolynomial polynomial_geodesic(const SymmetricProduct& u, const Vec& x0) {
  if (!is_associative(u).associative)
    throw PreconditionError("polynomial_geodesic: product is not associative");
  auto index = product_nilpotency(u);
  if (!index)
    throw PreconditionError("polynomial_geodesic: product is not nilpotent");
  GeodesicPolynomial p;
  p.initial = x0;
  Vec pow = x0;  // X0^{k+1}, starting at k = 0
  Rational sign(1);
  for (std::size_t k = 0;; ++k) {
    if (is_zero_vec(pow)) {
      if (p.coefficients.empty()) p.coefficients.push_back(zero_vec(x0.size()));
      break;
    }
    p.coefficients.push_back(sign * pow);
    if (k + 2 > *index) break;  // X0^{k+2} has at least `index` factors: zero
    pow = u.apply(x0, pow);
    sign = -sign;
  }
  return p;
}

/// Expands X' + X * X coefficientwise in t over exact rationals; true iff
/// every coefficient vanishes.
inline bool verify_polynomial_solution(const GeodesicPolynomial& p, const SymmetricProduct& u) {
  const std::size_t deg = p.coefficients.empty() ? 0 : p.coefficients.size() - 1;
  const std::size_t n = u.dim();
  for (std::size_t k = 0; k <= 2 * deg; ++k) {
    Vec c = zero_vec(n);
    if (k + 1 <= deg) c = c + Rational(static_cast<long long>(k + 1)) * p.coefficients[k + 1];
    for (std::size_t a = 0; a <= k && a <= deg; ++a) {
      std::size_t b = k - a;
      if (b > deg) continue;
      c = c + u.apply(p.coefficients[a], p.coefficients[b]);
    }
    if (!is_zero_vec(c)) return false;
  }
  return true;
}

struct NumericTrajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double step = 0.0;
};

namespace detail {

inline std::vector<std::vector<std::vector<double>>> product_to_double(const SymmetricProduct& u) {
  const std::size_t n = u.dim();
  std::vector<std::vector<std::vector<double>>> c(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = u.coeff(i, j)[k].to_double();
  return c;
}

inline double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace detail

constexpr double kBlowupThreshold = 1e12;

/// Classical fixed-step RK4 integration of X' = -X * X from t0 to t1.
/// Throws BlowupError carrying the last finite time when the state leaves
/// the trusted region.
inline NumericTrajectory numeric_flow(const SymmetricProduct& u, const std::vector<double>& x0,
                                      double t0, double t1, double dt) {
  if (!(dt > 0.0) || !(t1 > t0)) throw PreconditionError("numeric_flow: requires dt > 0, t1 > t0");
  const std::size_t n = u.dim();
  auto coeffs = detail::product_to_double(u);
  auto f = [&](const std::vector<double>& x) {
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0.0) continue;
        double c = x[i] * x[j];
        const auto& v = coeffs[i][j];
        for (std::size_t k = 0; k < n; ++k) d[k] -= c * v[k];
      }
    }
    return d;
  };
  NumericTrajectory traj;
  traj.step = dt;
  std::vector<double> x = x0;
  double t = t0;
  std::size_t steps = static_cast<std::size_t>(std::llround((t1 - t0) / dt));
  traj.times.push_back(t);
  traj.states.push_back(x);
  std::vector<double> k1, k2, k3, k4, tmp(n);
  for (std::size_t s = 0; s < steps; ++s) {
    k1 = f(x);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    k2 = f(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    k3 = f(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    k4 = f(tmp);
    for (std::size_t i = 0; i < n; ++i)
      x[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    t = t0 + dt * static_cast<double>(s + 1);
    bool finite = true;
    for (double v : x) finite = finite && std::isfinite(v);
    if (!finite || detail::sup_norm(x) > kBlowupThreshold)
      throw BlowupError("numeric_flow: suspected blow-up (state left the trusted region)",
                        traj.times.back());
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

inline Rational energy(const MetricLieAlgebra& mla, const Vec& x) { return mla.inner(x, x); }

inline double energy(const Matrix& gram, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram(i, j).to_double() * x[j];
  return s;
}

/// CSV export: header t,x_1,...,x_n, floats with 17 significant digits.
inline std::string trajectory_csv(const NumericTrajectory& traj) {
  std::string out = "t";
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  for (std::size_t i = 1; i <= n; ++i) out += ",x_" + std::to_string(i);
  out += "\n";
  char buf[64];
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%.17g", traj.times[s]);
    out += buf;
    for (double v : traj.states[s]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += ",";
      out += buf;
    }
    out += "\n";
  }
  return out;
}

enum class CompletenessStatus { CompleteByTheorem, NumericallySuspectBlowup, Inconclusive };

struct CompletenessVerdict {
  CompletenessStatus status = CompletenessStatus::Inconclusive;
  std::string detail;
};

inline const char* to_string(CompletenessStatus s) {
  switch (s) {
    case CompletenessStatus::CompleteByTheorem: return "CompleteByTheorem";
    case CompletenessStatus::NumericallySuspectBlowup: return "NumericallySuspectBlowup";
    default: return "Inconclusive";
  }
}

/// Completeness analysis. Verified hypotheses first (class membership plus
/// associativity, or a positive-definite metric); otherwise numeric probes
/// over a fixed grid of initial conditions, reported as a heuristic only.
inline CompletenessVerdict completeness_report(const MetricLieAlgebra& mla) {
  SymmetricProduct u = u_tensor(mla);
  bool assoc = is_associative(u).associative;
  bool w0 = in_class_w0(mla);
  if (assoc && w0)
    return {CompletenessStatus::CompleteByTheorem,
            "U-product is associative and unimodular: geodesic flow is polynomial"};
  Signature sig = signature(mla.space());
  if (sig.negative == 0 && sig.radical == 0)
    return {CompletenessStatus::CompleteByTheorem,
            "positive-definite metric: complete by the classical Riemannian result"};
  // fixed grid on the Euclidean unit sphere: +-e_i and normalized e_i +- e_j,
  // integrated both ways
  const std::size_t n = mla.dim();
  std::vector<std::vector<double>> grid;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(n, 0.0);
    v[i] = 1.0;
    grid.push_back(v);
    v[i] = -1.0;
    grid.push_back(v);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double sj : {1.0, -1.0}) {
        std::vector<double> v(n, 0.0);
        v[i] = inv_sqrt2;
        v[j] = sj * inv_sqrt2;
        grid.push_back(v);
      }
  for (const auto& x0 : grid) {
    try {
      numeric_flow(u, x0, 0.0, 10.0, 1e-3);
      std::vector<double> neg = x0;
      for (double& c : neg) c = -c;  // backward time via X(-t) symmetry of the quadratic flow
      numeric_flow(u, neg, 0.0, 10.0, 1e-3);
    } catch (const BlowupError& e) {
      return {CompletenessStatus::NumericallySuspectBlowup,
              "heuristic: numeric probe left the trusted region near t = " +
                  std::to_string(e.last_finite_time) + " (no theorem applies)"};
    }
  }
  return {CompletenessStatus::Inconclusive,
          "no theorem applies; numeric probes on the unit grid stayed bounded"};
}

}  // namespace metriclie
