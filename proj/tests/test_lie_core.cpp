#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace metriclie;
using testutil::basis_vec;

TEST_CASE("bracket expansion and antisymmetry") {
  LieAlgebra h3 = testutil::heisenberg3();
  CHECK(h3.bracket(basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));
  CHECK(h3.bracket(basis_vec(3, 1), basis_vec(3, 0)) == Rational(-1) * basis_vec(3, 2));
  Vec x{Rational(2), Rational(-1), Rational(5)};
  CHECK(is_zero_vec(h3.bracket(x, x)));

  MetricLieAlgebra sl2 = sl2_example();
  CHECK(sl2.algebra.bracket(basis_vec(3, 0), basis_vec(3, 2)) == basis_vec(3, 0));
}

TEST_CASE("set_bracket enforces i < j and dimensions") {
  LieAlgebra alg(3);
  CHECK_THROWS_AS(alg.set_bracket(1, 1, zero_vec(3)), MalformedInputError);
  CHECK_THROWS_AS(alg.set_bracket(2, 1, zero_vec(3)), MalformedInputError);
  CHECK_THROWS_AS(alg.set_bracket(0, 1, zero_vec(2)), MalformedInputError);
}

TEST_CASE("check_jacobi") {
  CHECK(check_jacobi(LieAlgebra(4)).holds);
  CHECK(check_jacobi(testutil::heisenberg3()).holds);
  CHECK(check_jacobi(sl2_example().algebra).holds);

  // deliberately broken coefficient: [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0
  LieAlgebra bad(3);
  bad.set_bracket(0, 1, basis_vec(3, 0));
  bad.set_bracket(0, 2, basis_vec(3, 1));
  JacobiReport rep = check_jacobi(bad);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("center") {
  auto c = center(testutil::heisenberg3());
  CHECK(subspace_equal(c, {basis_vec(3, 2)}, 3));
  CHECK(center(LieAlgebra(4)).size() == 4);
  CHECK(center(sl2_example().algebra).empty());
}

TEST_CASE("derived subalgebra") {
  CHECK(derived_subalgebra(LieAlgebra(3)).empty());
  CHECK(subspace_equal(derived_subalgebra(testutil::heisenberg3()), {basis_vec(3, 2)}, 3));
  CHECK(derived_subalgebra(sl2_example().algebra).size() == 3);
}

TEST_CASE("center lies in every ad kernel and derived is an ideal") {
  for (const auto& alg : {testutil::heisenberg3(), sl2_example().algebra, testutil::aff_r()}) {
    const std::size_t n = alg.dim();
    auto c = center(alg);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& z : c) CHECK(is_zero_vec(mat_vec(alg.ad_basis(b), z)));
    auto d = derived_subalgebra(alg);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& x : d)
        CHECK(subspace_contains(d, alg.bracket(basis_vec(n, b), x), n));
  }
}

TEST_CASE("is_abelian_ideal") {
  LieAlgebra h3 = testutil::heisenberg3();
  CHECK(is_abelian_ideal(h3, {basis_vec(3, 1), basis_vec(3, 2)}));  // span{F,Z}
  CHECK_FALSE(is_abelian_ideal(h3, {basis_vec(3, 0)}));             // span{E}: not an ideal
  LieAlgebra ab(3);
  CHECK(is_abelian_ideal(ab, {basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)}));
}

TEST_CASE("ad matrices") {
  CHECK(LieAlgebra(3).ad_basis(0).is_zero());
  MetricLieAlgebra sl2 = sl2_example();
  Matrix ad3 = sl2.algebra.ad_basis(2);
  CHECK(mat_vec(ad3, basis_vec(3, 0)) == Rational(-1) * basis_vec(3, 0));
  CHECK(mat_vec(ad3, basis_vec(3, 1)) == Vec{Rational(2), Rational(1), Rational(0)});
}

TEST_CASE("unimodularity of the Lie algebra") {
  CHECK(is_unimodular_lie(testutil::heisenberg3()));
  CHECK_FALSE(is_unimodular_lie(testutil::aff_r()));
  CHECK(is_unimodular_lie(sl2_example().algebra));
}

TEST_CASE("verify_isometric_isomorphism: identity and permutations") {
  MetricLieAlgebra sl2 = sl2_example();
  CHECK(verify_isometric_isomorphism({sl2, sl2, Matrix::identity(3)}).valid);

  // permutation of an abelian algebra with a matching gram
  Matrix g = Matrix::identity(3);
  g(0, 0) = Rational(2);
  MetricLieAlgebra ab(LieAlgebra(3), PseudoMetric(g));
  Matrix perm(3, 3);
  perm(0, 1) = perm(1, 0) = perm(2, 2) = Rational(1);
  Matrix g2 = perm.transpose() * g * perm;
  MetricLieAlgebra ab_src(LieAlgebra(3), PseudoMetric(g2));
  CHECK(verify_isometric_isomorphism({ab_src, ab, perm}).valid);
  CHECK_FALSE(verify_isometric_isomorphism({ab, ab, perm}).valid);  // gram mismatch

  CHECK_THROWS_AS(verify_isometric_isomorphism({sl2, sl2, Matrix(3, 3)}), PreconditionError);
}

TEST_CASE("verify_isometric_isomorphism detects bracket mismatch") {
  MetricLieAlgebra h = heisenberg_lorentzian(1);
  MetricLieAlgebra ab(LieAlgebra(3), PseudoMetric(h.metric.gram));
  auto rep = verify_isometric_isomorphism({h, ab, Matrix::identity(3)});
  CHECK_FALSE(rep.valid);
  CHECK(rep.failure_reason.find("bracket") != std::string::npos);
}

TEST_CASE("theta is invariant under verified isometric isomorphisms") {
  std::mt19937 rng(424242);
  for (const MetricLieAlgebra& base : {sl2_example(), heisenberg_lorentzian(-1)}) {
    for (int iter = 0; iter < 8; ++iter) {
      Matrix p = testutil::random_invertible(rng, base.dim());
      MetricLieAlgebra moved = testutil::transform_mla(base, p);
      REQUIRE(check_jacobi(moved.algebra).holds);
      LinearMapBetweenAlgebras phi{moved, base, p};
      REQUIRE(verify_isometric_isomorphism(phi).valid);
      Tensor3 th_src = theta_tensor(moved);
      Tensor3 th_tgt = theta_tensor(base);
      const std::size_t n = base.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            // pullback: theta_tgt(phi e_i, phi e_j, phi e_k) = theta_src(e_i, e_j, e_k)
            Vec a = p.column(i), b = p.column(j), c = p.column(k);
            Rational pulled(0);
            for (std::size_t x = 0; x < n; ++x)
              for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                  Rational f = a[x] * b[y] * c[z];
                  if (!f.is_zero()) pulled += f * th_tgt.at(x, y, z);
                }
            CHECK(pulled == th_src.at(i, j, k));
          }
    }
  }
}

TEST_CASE("two-step nilpotent inputs have derived inside center") {
  for (const auto& mla : {heisenberg_lorentzian(1), two_step_split_example()}) {
    auto d = derived_subalgebra(mla.algebra);
    auto c = center(mla.algebra);
    for (const auto& x : d) CHECK(subspace_contains(c, x, mla.dim()));
  }
}
