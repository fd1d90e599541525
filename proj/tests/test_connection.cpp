#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace metriclie;
using testutil::basis_vec;

namespace {

void check_structural_identities(const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  QuadraticSpace space = mla.space();
  BilinearProduct nabla = levi_civita(mla);
  SymmetricProduct u = u_tensor(mla);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // torsion-free split: nabla(X,Y) - nabla(Y,X) = [X,Y] and the symmetric
      // part doubles to 2U
      Vec diff = nabla.coeff(i, j) - nabla.coeff(j, i);
      CHECK(diff == mla.algebra.bracket_basis(i, j));
      Vec sum = nabla.coeff(i, j) + nabla.coeff(j, i);
      CHECK(sum == Rational(2) * u.coeff(i, j));
      // metric compatibility on basis triples
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = space.inner(nabla.coeff(i, j), basis_vec(n, k)) +
                       space.inner(basis_vec(n, j), nabla.coeff(i, k));
        CHECK(lhs.is_zero());
      }
      // Koszul right-hand side reproduced
      for (std::size_t k = 0; k < n; ++k) {
        Rational rhs = half() * (space.inner(mla.algebra.bracket_basis(i, j), basis_vec(n, k)) -
                                 space.inner(mla.algebra.bracket_basis(j, k), basis_vec(n, i)) +
                                 space.inner(mla.algebra.bracket_basis(k, i), basis_vec(n, j)));
        CHECK(space.inner(nabla.coeff(i, j), basis_vec(n, k)) == rhs);
      }
    }

  Tensor3 th = theta_tensor(u, space);
  CHECK(th.is_partially_symmetric());
  CHECK(check_cyclic(th).holds);
  // trace identity 2 Tr_23 + Tr_12 = 0
  Vec t12 = trace_12(th, space);
  Vec t23 = trace_23(th, space);
  CHECK(is_zero_vec(Rational(2) * t23 + t12));
  // theta(X,X,X) = 0 on random vectors
  std::mt19937 rng(7);
  for (int s = 0; s < 5; ++s) {
    Vec x = testutil::random_vec(rng, n);
    Rational v(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) v += x[i] * x[j] * x[k] * th.at(i, j, k);
    CHECK(v.is_zero());
  }
  // trace relation tr L_X = -1/2 tr ad_X on basis vectors
  for (std::size_t i = 0; i < n; ++i) {
    Rational tl = trace(left_mult_matrix(u, basis_vec(n, i)));
    Rational ta = trace(mla.algebra.ad_basis(i));
    CHECK(Rational(2) * tl == -ta);
  }
}

}  // namespace

TEST_CASE("abelian algebras have zero connection") {
  MetricLieAlgebra ab(LieAlgebra(3), PseudoMetric(Matrix::identity(3)));
  BilinearProduct nabla = levi_civita(ab);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(is_zero_vec(nabla.coeff(i, j)));
  CHECK(u_tensor(ab).is_zero());
  CHECK(theta_tensor(ab).is_zero());
}

TEST_CASE("degenerate metrics are rejected") {
  Matrix g(2, 2);
  g(0, 0) = Rational(1);
  LieAlgebra alg(2);
  MetricLieAlgebra mla(alg, PseudoMetric(g));
  CHECK_THROWS_AS(levi_civita(mla), DegenerateMetricError);
  CHECK_THROWS_AS(u_tensor(mla), DegenerateMetricError);
}

TEST_CASE("sl(2,R) product table") {
  MetricLieAlgebra sl2 = sl2_example();
  SymmetricProduct u = u_tensor(sl2);
  CHECK(u.coeff(0, 0) == basis_vec(3, 2));                                      // e1*e1 = e3
  CHECK(u.coeff(0, 1) == Rational(-1) * basis_vec(3, 2));                       // e1*e2 = -e3
  CHECK(u.coeff(0, 2) == Vec{Rational(1, 2), Rational(1, 2), Rational(0)});     // e1*e3
  CHECK(u.coeff(1, 1) == basis_vec(3, 2));                                      // e2*e2 = e3
  CHECK(u.coeff(1, 2) == Vec{Rational(-1, 2), Rational(-1, 2), Rational(0)});   // e2*e3
  CHECK(is_zero_vec(u.coeff(2, 2)));                                            // e3*e3 = 0
  Tensor3 th = theta_tensor(sl2);
  CHECK(th.at(0, 0, 2) == Rational(1));
  check_structural_identities(sl2);
}

TEST_CASE("heisenberg_lorentzian product table") {
  for (int eps : {1, -1}) {
    MetricLieAlgebra h = heisenberg_lorentzian(eps);
    SymmetricProduct u = u_tensor(h);
    CHECK(u.coeff(0, 1) == Vec{Rational(0), Rational(0), Rational(-1, 2)});  // E*F = -Z/2
    CHECK(u.coeff(1, 1) == Rational(eps) * basis_vec(3, 0));                 // F*F = eps E
    CHECK(is_zero_vec(u.coeff(0, 0)));
    CHECK(is_zero_vec(u.coeff(0, 2)));
    CHECK(is_zero_vec(u.coeff(1, 2)));
    CHECK(is_zero_vec(u.coeff(2, 2)));
    Tensor3 th = theta_tensor(h);
    CHECK(th.at(0, 1, 1) == Rational(-1, 2));  // theta(E,F,F) = -1/2
    CHECK(th.at(1, 1, 1).is_zero());
    CHECK(th.at(1, 1, 2).is_zero());
    check_structural_identities(h);
  }
}

TEST_CASE("bi-invariant metric has U = 0: Killing form of sl(2,R)") {
  LieAlgebra alg = sl2_example().algebra;
  // Killing form B(x,y) = tr(ad_x ad_y)
  Matrix killing(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      killing(i, j) = trace(alg.ad_basis(i) * alg.ad_basis(j));
  REQUIRE_FALSE(determinant(killing).is_zero());
  MetricLieAlgebra biinv(alg, PseudoMetric(killing));
  CHECK(u_tensor(biinv).is_zero());
}

TEST_CASE("almost-abelian connection formulas") {
  // nabla_e e = 0, nabla_e Y = A Y, nabla_X e = -S X, nabla_X Y = eps <SX,Y> e
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int iter = 0; iter < 10; ++iter) {
    std::size_t m = 2 + iter % 3;
    Matrix t(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t(i, j) = Rational(d(rng));
    Matrix gram_a = testutil::random_nondegenerate_gram(rng, m);
    int eps = iter % 2 ? 1 : -1;
    MetricLieAlgebra mla = almost_abelian(t, gram_a, eps);
    REQUIRE(check_jacobi(mla.algebra).holds);
    const std::size_t n = m + 1;
    QuadraticSpace sa(gram_a);
    Matrix tdag = adjoint_map(t, sa);
    Matrix s = half() * (t + tdag);
    Matrix a = half() * (t - tdag);
    BilinearProduct nabla = levi_civita(mla);
    SymmetricProduct u = u_tensor(mla);
    CHECK(is_zero_vec(nabla.coeff(0, 0)));
    for (std::size_t y = 0; y < m; ++y) {
      Vec expected = zero_vec(n);
      for (std::size_t i = 0; i < m; ++i) expected[1 + i] = a(i, y);
      CHECK(nabla.coeff(0, 1 + y) == expected);
      Vec expected_s = zero_vec(n);
      for (std::size_t i = 0; i < m; ++i) expected_s[1 + i] = -s(i, y);
      CHECK(nabla.coeff(1 + y, 0) == expected_s);
      // U(e, X) = -1/2 Tdag X
      Vec expected_u = zero_vec(n);
      for (std::size_t i = 0; i < m; ++i) expected_u[1 + i] = Rational(-1, 2) * tdag(i, y);
      CHECK(u.coeff(0, 1 + y) == expected_u);
    }
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Rational sxy(0);  // <S e_x, e_y> on the ideal
        for (std::size_t p = 0; p < m; ++p) sxy += s(p, x) * gram_a(p, y);
        Vec expected = zero_vec(n);
        expected[0] = Rational(eps) * sxy;
        CHECK(nabla.coeff(1 + x, 1 + y) == expected);
      }
    check_structural_identities(mla);
  }
}

TEST_CASE("two-step nilpotent connection formulas on Euclidean h3") {
  MetricLieAlgebra h3 = testutil::euclidean_h3();
  BilinearProduct nabla = levi_civita(h3);
  // nabla_E F = 1/2 [E,F] = Z/2; nabla_E Z = -1/2 J_Z E = -F/2; nabla_Z Z = 0
  CHECK(nabla.coeff(0, 1) == Vec{Rational(0), Rational(0), Rational(1, 2)});
  CHECK(nabla.coeff(0, 2) == Vec{Rational(0), Rational(-1, 2), Rational(0)});
  CHECK(nabla.coeff(2, 0) == Vec{Rational(0), Rational(-1, 2), Rational(0)});
  CHECK(is_zero_vec(nabla.coeff(2, 2)));
  check_structural_identities(h3);
}

TEST_CASE("trace_12 on aff(R) with the Euclidean metric") {
  MetricLieAlgebra mla = testutil::aff_r_mla(Matrix::identity(2));
  SymmetricProduct u = u_tensor(mla);
  CHECK(u.coeff(1, 1) == basis_vec(2, 0));                      // U(e2,e2) = e1
  CHECK(u.coeff(0, 1) == Vec{Rational(0), Rational(-1, 2)});    // U(e1,e2) = -e2/2
  Tensor3 th = theta_tensor(mla);
  CHECK(trace_12(th, mla.space()) == basis_vec(2, 0));          // e1-dual covector
  CHECK(trace(left_mult_matrix(u, basis_vec(2, 0))) == Rational(-1, 2));
  check_structural_identities(mla);
}

TEST_CASE("structural identities across random metrics on templates") {
  std::mt19937 rng(90210);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    for (const auto& alg : testutil::bracket_templates(dim)) {
      REQUIRE(check_jacobi(alg).holds);
      for (int s = 0; s < 3; ++s) {
        Matrix g = testutil::random_nondegenerate_gram(rng, dim);
        check_structural_identities(MetricLieAlgebra(alg, PseudoMetric(g)));
      }
    }
  }
}

TEST_CASE("trace_12 of a unimodular MLA vanishes") {
  std::mt19937 rng(5150);
  for (int s = 0; s < 6; ++s) {
    Matrix g = testutil::random_nondegenerate_gram(rng, 3);
    MetricLieAlgebra mla(testutil::heisenberg3(), PseudoMetric(g));
    CHECK(is_zero_vec(trace_12(theta_tensor(mla), mla.space())));
  }
}

TEST_CASE("left_mult_matrix on the sl(2,R) product") {
  SymmetricProduct u = u_tensor(sl2_example());
  Matrix l1 = left_mult_matrix(u, basis_vec(3, 0));
  CHECK(mat_vec(l1, basis_vec(3, 0)) == basis_vec(3, 2));
  CHECK(mat_vec(l1, basis_vec(3, 1)) == Rational(-1) * basis_vec(3, 2));
  CHECK(mat_vec(l1, basis_vec(3, 2)) == Vec{Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(left_mult_matrix(u_tensor(MetricLieAlgebra(LieAlgebra(2), PseudoMetric(Matrix::identity(2)))),
                         basis_vec(2, 0))
            .is_zero());
}
