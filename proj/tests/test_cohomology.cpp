#include <doctest.h>

#include "helpers.hpp"
#include "plesken/cohomology.hpp"
#include "plesken/fixtures.hpp"

#include <random>

using namespace plesken;

namespace {

BilinearForm form(std::size_t n, Vector upper) { return BilinearForm::from_upper(n, upper); }

// [x0, x1] = x1 with x2 central; alpha(x1, x2) is the only cocycle obstruction
LieAlgebra affine_plus_line() { return from_structure_constants(3, {{0, 1, {0, 1, 0}}}); }

}  // namespace

TEST_CASE("alternating forms") {
  BilinearForm a = form(3, {1, 2, 3});
  CHECK(a(0, 1) == Scalar(1));
  CHECK(a(1, 0) == Scalar(-1));
  CHECK(a(1, 2) == Scalar(3));
  CHECK(a.upper() == Vector{1, 2, 3});
  CHECK(a.evaluate(Vector{1, 0, 0}, Vector{0, 0, 1}) == Scalar(2));
  CHECK(error_code([] { BilinearForm(Matrix::from_rows({{1, 0}, {0, 0}})); }) == "NotAlternating");
  CHECK(error_code([] { BilinearForm(Matrix::from_rows({{0, 1}, {1, 0}})); }) == "NotAlternating");
  CHECK(error_code([] { BilinearForm::from_upper(3, Vector{1}); }) == "DimensionMismatch");
  CHECK(BilinearForm::zero(0).dim() == 0);
}

TEST_CASE("cocycle residual") {
  LieAlgebra ab = abelian_algebra(3);
  CHECK(cocycle_residual(ab, form(3, {1, 5, -2}), 0, 1, 2).is_zero());
  LieAlgebra r = affine_plus_line();
  BilinearForm a = form(3, {1, 2, 3});
  CHECK(cocycle_residual(r, a, 1, 1, 1).is_zero());
  CHECK(cocycle_residual(r, a, 0, 0, 2).is_zero());
  CHECK(error_code([&] { cocycle_residual(r, a, 0, 1, 3); }) == "IndexOutOfRange");
  // residual through the structure-constant path agrees with the bilinear definition
  auto direct = [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector ek = unit_vector(3, k), ei = unit_vector(3, i), ej = unit_vector(3, j);
    return a.evaluate(r.bracket_basis(i, j), ek) + a.evaluate(r.bracket_basis(j, k), ei) +
           a.evaluate(r.bracket_basis(k, i), ej);
  };
  CHECK(cocycle_residual(r, a, 0, 1, 2) == direct(0, 1, 2));
  CHECK(cocycle_residual(r, a, 2, 0, 1) == direct(2, 0, 1));
  CHECK(cocycle_residual(r, a, 0, 1, 2) == Scalar(3));
  CocycleCheck check = is_cocycle(r, a);
  CHECK_FALSE(check.ok);
  CHECK(check.witness == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(is_cocycle(r, form(3, {1, 2, 0})).ok);
  // on sl2 the single constraint vanishes identically
  CHECK(is_cocycle(sl2_algebra(), form(3, {1, 0, 0})).ok);
}

TEST_CASE("Z2 and B2") {
  CHECK(z2_basis(abelian_algebra(3)).dim() == 3);
  CHECK(z2_basis(abelian_algebra(1)).dim() == 0);
  CHECK(z2_basis(sl2_algebra()).dim() == 3);
  CHECK(z2_basis(sl2_algebra()) == b2_basis(sl2_algebra()));
  CHECK(z2_basis(affine_plus_line()).dim() == 2);
  CHECK(b2_basis(abelian_algebra(3)).dim() == 0);
  Subspace b = b2_basis(heisenberg_algebra());
  CHECK(b == Subspace(3, {Vector{1, 0, 0}}));
  CHECK(b2_basis(plesken_algebra(preset("quaternion8", 0)).algebra).dim() == 3);
  // the constraint matrix cuts out exactly the cocycles
  LieAlgebra heis = heisenberg_algebra();
  Matrix c = cocycle_constraints(heis);
  Subspace z2 = z2_basis(heis);
  for (const auto& v : z2.basis()) CHECK(is_zero(c * v));
  CHECK(coboundary_matrix(heis) * Vector{0, 0, 1} == Vector{-1, 0, 0});
}

TEST_CASE("second cohomology") {
  SecondCohomology ab2 = h2(abelian_algebra(2));
  CHECK(ab2.dim == 1);
  CHECK(ab2.dim_z2 == 1);
  CHECK(ab2.dim_b2 == 0);
  SecondCohomology heis = h2(heisenberg_algebra());
  CHECK(heis.dim_z2 == 3);
  CHECK(heis.dim_b2 == 1);
  CHECK(heis.dim == 2);
  REQUIRE(heis.representatives.size() == 2);
  CHECK(heis.representatives[0] == form(3, {0, 1, 0}));
  CHECK(heis.representatives[1] == form(3, {0, 0, 1}));
  CHECK(h2(plesken_algebra(preset("quaternion8", 0)).algebra).dim == 0);
  CHECK(h2(sl2_algebra()).dim == 0);
  CHECK(h2(abelian_algebra(0)).dim == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(h2(abelian_algebra(n)).dim == n * (n - 1) / 2);
}

TEST_CASE("cohomologous cocycles") {
  LieAlgebra heis = heisenberg_algebra();
  BilinearForm a = form(3, {1, 0, 0});
  BilinearForm zero = BilinearForm::zero(3);
  auto same = are_cohomologous(heis, a, a);
  REQUIRE(same);
  CHECK(*same == LinearFunctional::zero(3));

  // beta - alpha = coboundary(sigma): -alpha(X,Y) = -sigma(Z), so sigma(Z) = 1
  auto s = are_cohomologous(heis, a, zero);
  REQUIRE(s);
  CHECK(s->values == Vector{0, 0, 1});
  CHECK(zero - a == coboundary(heis, *s));

  CHECK_FALSE(are_cohomologous(heis, form(3, {0, 1, 0}), zero));
  CHECK(error_code([&] { are_cohomologous(affine_plus_line(), form(3, {0, 0, 1}), zero); }) == "NotACocycle");
  CHECK(error_witness([&] { are_cohomologous(affine_plus_line(), zero, form(3, {0, 0, 1})); })["which"] == "beta");
}

TEST_CASE("cohomology classes") {
  LieAlgebra heis = heisenberg_algebra();
  CohomologyClass trivial(heis, form(3, {5, 0, 0}));
  CHECK(trivial.is_trivial());
  CohomologyClass c1(heis, form(3, {2, 1, 0}));
  CohomologyClass c2(heis, form(3, {-7, 1, 0}));
  CHECK(c1 == c2);
  CHECK_FALSE(c1 == CohomologyClass(heis, form(3, {0, 1, 1})));
  CHECK(error_code([] { CohomologyClass(affine_plus_line(), form(3, {0, 0, 1})); }) == "NotACocycle");
}

TEST_CASE("coboundaries are cocycles and differences of cohomologous forms are coboundaries") {
  std::mt19937_64 rng(11);
  for (const auto& [name, L] : fixtures::algebras(16)) {
    CAPTURE(name);
    Subspace z2 = z2_basis(L);
    CHECK(z2.contains(b2_basis(L)));
    for (int k = 0; k < 5; ++k) {
      LinearFunctional sigma{fixtures::random_vector(rng, L.dim())};
      BilinearForm d = coboundary(L, sigma);
      CHECK(is_cocycle(L, d).ok);
      BilinearForm alpha = BilinearForm::from_upper(L.dim(), fixtures::random_element(rng, z2));
      auto tau = are_cohomologous(L, alpha, alpha + d);
      REQUIRE(tau);
      CHECK(coboundary(L, *tau) == d);
    }
  }
}
