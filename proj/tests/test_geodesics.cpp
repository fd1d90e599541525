#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace metriclie;
using testutil::basis_vec;

TEST_CASE("polynomial geodesics on the worked families") {
  SUBCASE("heisenberg, X0 = F: X(t) = F - tE - t^2 Z / 2") {
    SymmetricProduct u = u_tensor(heisenberg_lorentzian(1));
    GeodesicPolynomial p = polynomial_geodesic(u, basis_vec(3, 1));
    REQUIRE(p.coefficients.size() == 3);
    CHECK(p.coefficients[0] == basis_vec(3, 1));
    CHECK(p.coefficients[1] == Rational(-1) * basis_vec(3, 0));
    CHECK(p.coefficients[2] == Vec{Rational(0), Rational(0), Rational(-1, 2)});
    CHECK(verify_polynomial_solution(p, u));
    // energy is identically zero along this null geodesic
    MetricLieAlgebra h = heisenberg_lorentzian(1);
    for (int k = -4; k <= 4; ++k) {
      Vec x = p.evaluate(Rational(k, 2));
      CHECK(energy(h, x).is_zero());
    }
  }
  SUBCASE("sl(2,R), X0 = e1: X(t) = e1 - t e3 + t^2 (e1+e2)/2") {
    SymmetricProduct u = u_tensor(sl2_example());
    GeodesicPolynomial p = polynomial_geodesic(u, basis_vec(3, 0));
    REQUIRE(p.coefficients.size() == 3);
    CHECK(p.coefficients[0] == basis_vec(3, 0));
    CHECK(p.coefficients[1] == Rational(-1) * basis_vec(3, 2));
    CHECK(p.coefficients[2] == Vec{Rational(1, 2), Rational(1, 2), Rational(0)});
    CHECK(verify_polynomial_solution(p, u));
  }
  SUBCASE("annihilator directions give constant curves") {
    SymmetricProduct u = u_tensor(sl2_example());
    Vec x0{Rational(1), Rational(1), Rational(0)};  // e1 + e2 spans Ann
    GeodesicPolynomial p = polynomial_geodesic(u, x0);
    CHECK(p.coefficients.size() == 1);
    CHECK(p.coefficients[0] == x0);
    CHECK(verify_polynomial_solution(p, u));
  }
}

TEST_CASE("polynomial geodesic preconditions") {
  CHECK_THROWS_AS(polynomial_geodesic(u_tensor(testutil::euclidean_h3()), basis_vec(3, 0)),
                  PreconditionError);
  SymmetricProduct idem(1);
  idem.set_coeff(0, 0, basis_vec(1, 0));  // associative but not nilpotent
  CHECK_THROWS_AS(polynomial_geodesic(idem, basis_vec(1, 0)), PreconditionError);
}

TEST_CASE("verify_polynomial_solution rejects wrong candidates") {
  SymmetricProduct u = u_tensor(heisenberg_lorentzian(1));
  // constant curve with X0 * X0 != 0
  GeodesicPolynomial constant;
  constant.initial = basis_vec(3, 1);
  constant.coefficients = {basis_vec(3, 1)};
  CHECK_FALSE(verify_polynomial_solution(constant, u));
  // hand-perturbed coefficient
  GeodesicPolynomial p = polynomial_geodesic(u, basis_vec(3, 1));
  p.coefficients[1][0] += Rational(1, 7);
  CHECK_FALSE(verify_polynomial_solution(p, u));
}

TEST_CASE("random initial data: exact identities and degree bound") {
  std::mt19937 rng(64);
  for (const auto& mla : {heisenberg_lorentzian(1), heisenberg_lorentzian(-1), sl2_example(),
                          two_step_split_example()}) {
    SymmetricProduct u = u_tensor(mla);
    auto index = product_nilpotency(u);
    REQUIRE(index.has_value());
    for (int s = 0; s < 20; ++s) {
      Vec x0 = testutil::random_vec(rng, mla.dim());
      GeodesicPolynomial p = polynomial_geodesic(u, x0);
      CHECK(verify_polynomial_solution(p, u));
      CHECK(p.coefficients.size() <= *index - 1);  // degree <= index - 2
      // energy conservation as an exact polynomial identity in t:
      // <X(t),X(t)> has all nonconstant coefficients zero
      const std::size_t deg = p.coefficients.size() - 1;
      for (std::size_t k = 1; k <= 2 * deg; ++k) {
        Rational coeff(0);
        for (std::size_t a = 0; a <= k && a <= deg; ++a) {
          std::size_t b = k - a;
          if (b > deg) continue;
          coeff += mla.inner(p.coefficients[a], p.coefficients[b]);
        }
        CHECK(coeff.is_zero());
      }
    }
  }
}

TEST_CASE("numeric flow basics") {
  SUBCASE("zero product: constant trajectory") {
    SymmetricProduct u(2);
    NumericTrajectory traj = numeric_flow(u, {1.0, -2.0}, 0.0, 1.0, 0.125);
    REQUIRE(traj.states.size() == 9);
    for (const auto& s : traj.states) {
      CHECK(s[0] == 1.0);
      CHECK(s[1] == -2.0);
    }
  }
  SUBCASE("parameter validation") {
    SymmetricProduct u(2);
    CHECK_THROWS_AS(numeric_flow(u, {1.0, 0.0}, 0.0, 1.0, -0.1), PreconditionError);
    CHECK_THROWS_AS(numeric_flow(u, {1.0, 0.0}, 1.0, 0.0, 0.1), PreconditionError);
  }
}

TEST_CASE("oracle agreement: polynomial vs RK4 on |t| <= 10") {
  for (const auto& mla : {heisenberg_lorentzian(1), sl2_example(), two_step_split_example()}) {
    SymmetricProduct u = u_tensor(mla);
    const std::size_t n = mla.dim();
    Vec x0 = zero_vec(n);
    x0[1] = Rational(1);
    x0[0] = Rational(1, 2);
    GeodesicPolynomial p = polynomial_geodesic(u, x0);
    std::vector<double> x0d(n);
    for (std::size_t i = 0; i < n; ++i) x0d[i] = x0[i].to_double();
    for (double dir : {1.0, -1.0}) {
      // backward time via the symmetry X(-t; x0) = -X(t; -x0)
      std::vector<double> start = x0d;
      if (dir < 0)
        for (auto& c : start) c = -c;
      NumericTrajectory traj = numeric_flow(u, start, 0.0, 10.0, 1e-3);
      double dev = 0.0;
      for (std::size_t s = 0; s < traj.times.size(); s += 10) {
        std::vector<double> exact = p.evaluate_double(dir * traj.times[s]);
        for (std::size_t i = 0; i < n; ++i)
          dev = std::max(dev, std::fabs(dir * traj.states[s][i] - exact[i]));
      }
      CHECK(dev < 1e-8);
    }
  }
}

TEST_CASE("numeric energy drift stays below 1e-9 relative") {
  for (const auto& mla : {heisenberg_lorentzian(1), sl2_example()}) {
    SymmetricProduct u = u_tensor(mla);
    std::vector<double> x0(mla.dim(), 0.0);
    x0[0] = 0.75;
    x0[1] = 1.0;
    NumericTrajectory traj = numeric_flow(u, x0, 0.0, 10.0, 1e-3);
    double e0 = energy(mla.metric.gram, traj.states.front());
    double scale = std::max(1.0, std::fabs(e0));
    for (const auto& s : traj.states)
      CHECK(std::fabs(energy(mla.metric.gram, s) - e0) / scale < 1e-9);
  }
}

TEST_CASE("finite-time escape on aff(R) with the neutral metric") {
  // [e1,e2] = e2 with gram [[0,1],[1,0]]: the reduced flow contains x' = x^2
  MetricLieAlgebra mla = testutil::aff_r_mla(Matrix::from_nested({{0, 1}, {1, 0}}));
  SymmetricProduct u = u_tensor(mla);
  CHECK_THROWS_AS(numeric_flow(u, {1.0, 0.0}, 0.0, 2.0, 1e-4), BlowupError);
  try {
    numeric_flow(u, {1.0, 0.0}, 0.0, 2.0, 1e-4);
  } catch (const BlowupError& e) {
    CHECK(e.last_finite_time > 0.9);  // escape at t = 1
    CHECK(e.last_finite_time <= 1.0);
  }
  CompletenessVerdict v = completeness_report(mla);
  CHECK(v.status == CompletenessStatus::NumericallySuspectBlowup);
}

TEST_CASE("completeness verdicts") {
  CHECK(completeness_report(heisenberg_lorentzian(1)).status ==
        CompletenessStatus::CompleteByTheorem);
  CHECK(completeness_report(heisenberg_lorentzian(-1)).status ==
        CompletenessStatus::CompleteByTheorem);
  CHECK(completeness_report(sl2_example()).status == CompletenessStatus::CompleteByTheorem);
  // positive-definite metrics short-circuit to a complete verdict
  CompletenessVerdict riem = completeness_report(testutil::euclidean_h3());
  CHECK(riem.status == CompletenessStatus::CompleteByTheorem);
  CHECK(riem.detail.find("positive-definite") != std::string::npos);
}

TEST_CASE("inconclusive verdict: indefinite non-associative metric with bounded probes") {
  // Euclidean h3 times a negative line: no theorem applies (not associative,
  // not positive definite) and the reduced flow stays bounded on the grid
  Matrix m1(1, 1);
  m1(0, 0) = Rational(-1);
  MetricLieAlgebra mla = direct_product(testutil::euclidean_h3(), abelian_mla(m1));
  REQUIRE_FALSE(is_associative(u_tensor(mla)).associative);
  CompletenessVerdict v = completeness_report(mla);
  CHECK(v.status == CompletenessStatus::Inconclusive);
}

TEST_CASE("trajectory CSV format") {
  SymmetricProduct u(2);
  NumericTrajectory traj = numeric_flow(u, {0.5, -1.0}, 0.0, 0.2, 0.1);
  std::string csv = trajectory_csv(traj);
  CHECK(csv.substr(0, 8) == "t,x_1,x_");
  CHECK(csv.find("0.5,-1") != std::string::npos);
  // one header plus one row per stored step
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + traj.times.size());
}
