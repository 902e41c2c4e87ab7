#include <doctest.h>

#include "helpers.hpp"
#include "plesken/fixtures.hpp"
#include "plesken/projective_rep.hpp"

#include <random>

using namespace plesken;

namespace {

Matrix e(std::size_t d, std::size_t r, std::size_t c) {
  Matrix m(d, d);
  m(r, c) = 1;
  return m;
}

}  // namespace

TEST_CASE("linear representations have zero cocycle") {
  LieAlgebra sl2 = sl2_algebra();
  CHECK(cocycle_from_rep(adjoint_rep(sl2)) == BilinearForm::zero(3));
  ProjectiveRep defining = lift_linear(sl2, {Matrix::from_rows({{1, 0}, {0, -1}}), e(2, 0, 1), e(2, 1, 0)});
  CHECK(defining.cocycle == BilinearForm::zero(3));
  CHECK(lift_linear(sl2, {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)}).degree() == 2);
  CHECK(error_code([] { lift_linear(abelian_algebra(2), {e(2, 0, 1), e(2, 1, 0)}); }) == "NotAHomomorphism");
}

TEST_CASE("dihedral rotation rep") {
  auto pair = fixtures::dihedral_pair();
  CHECK(cocycle_from_rep(pair.first) == BilinearForm::zero(1));
  CHECK(pair.first.matrices[0] == Matrix::from_rows({{0, 2}, {-2, 0}}));
}

TEST_CASE("defects that are not scalar") {
  LieAlgebra plane = abelian_algebra(2);
  CHECK(error_code([&] { cocycle_from_rep(plane, {e(2, 0, 1), e(2, 1, 0)}); }) == "DefectNotScalar");
  Json w = error_witness([&] { cocycle_from_rep(plane, {e(2, 0, 1), e(2, 1, 0)}); });
  CHECK(w["i"] == 0);
  CHECK(w["j"] == 1);
  CHECK(w["row"] == 1);
  CHECK(w["col"] == 1);
  CHECK(w["value"] == "-1");

  auto failures = validate_alpha_rep(plane, {e(2, 0, 1), Matrix(2, 2)}, BilinearForm::from_upper(2, Vector{1}));
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].i == 0);
  CHECK(failures[0].j == 1);
  CHECK(failures[0].residual == Scalar(-1) * Matrix::identity(2));

  auto e13 = validate_alpha_rep(plane, {e(3, 0, 1), e(3, 1, 2)}, BilinearForm::zero(2));
  REQUIRE(e13.size() == 1);
  CHECK(e13[0].residual == e(3, 0, 2));
}

TEST_CASE("rep shape checks") {
  LieAlgebra plane = abelian_algebra(2);
  CHECK(error_code([&] { check_rep_shape(plane, {Matrix(2, 2)}); }) == "DimensionMismatch");
  CHECK(error_code([&] { check_rep_shape(plane, {Matrix(0, 0), Matrix(0, 0)}); }) == "BadDegree");
  CHECK(error_code([&] { check_rep_shape(plane, {Matrix(2, 2), Matrix(3, 3)}); }) == "DimensionMismatch");
}

TEST_CASE("heisenberg alpha-representation") {
  ProjectiveRep rep = fixtures::heisenberg_alpha_rep();
  BilinearForm alpha = cocycle_from_rep(rep);
  CHECK(alpha == BilinearForm::from_upper(3, Vector{1, 0, 0}));
  CHECK(validate_alpha_rep(rep.algebra, rep.matrices, alpha).empty());
  // alpha is a coboundary, as for every finite-dimensional alpha-rep
  CHECK(are_cohomologous(rep.algebra, alpha, BilinearForm::zero(3)).has_value());

  LinearFunctional sigma{Vector{0, 0, 1}};
  ProjectiveRep t = twist(rep, sigma);
  CHECK(cocycle_from_rep(t) == alpha - coboundary(rep.algebra, sigma));
  CHECK(cocycle_from_rep(t) == BilinearForm::zero(3) + BilinearForm::from_upper(3, Vector{2, 0, 0}));
  CHECK(twist(rep, LinearFunctional::zero(3)).matrices == rep.matrices);
}

TEST_CASE("projective equivalence on the dihedral pair") {
  auto pair = fixtures::dihedral_pair();
  LinearFunctional zero = LinearFunctional::zero(1);
  auto report = verify_projective_equivalence(pair.first, pair.second, pair.f, zero);
  CHECK(report.ok());
  CHECK(report.linear);
  CHECK(cohomologous_witness_from_equivalence(pair.first, pair.second, pair.f, zero) == zero);
  CHECK_FALSE(verify_projective_equivalence(pair.first, pair.second, Matrix::identity(2), zero).ok());
  CHECK(error_code([&] {
          cohomologous_witness_from_equivalence(pair.first, pair.second, Matrix::identity(2), zero);
        }) == "NotEquivalent");
  CHECK(error_code([&] { verify_projective_equivalence(pair.first, pair.second, Matrix(2, 2), zero); }) == "SingularF");
  ProjectiveRep big{pair.algebra, {Matrix::identity(3)}, std::nullopt};
  CHECK(error_code([&] { verify_projective_equivalence(pair.first, big, Matrix::identity(2), zero); }) ==
        "DegreeMismatch");

  // identity equivalence of a rep with itself
  CHECK(cohomologous_witness_from_equivalence(pair.first, pair.first, Matrix::identity(2), zero) == zero);
}

TEST_CASE("twisting is a projective equivalence with f = I and delta = -sigma") {
  std::mt19937_64 rng(13);
  for (const auto& [name, rep] : fixtures::reps(8)) {
    CAPTURE(name);
    const std::size_t n = rep.algebra.dim();
    LinearFunctional sigma{fixtures::random_vector(rng, n)};
    ProjectiveRep t = twist(rep, sigma);
    auto report = verify_projective_equivalence(rep, t, Matrix::identity(rep.degree()), -sigma);
    CHECK(report.ok());
    CHECK(report.linear == is_zero(sigma.values));
    CHECK(cohomologous_witness_from_equivalence(rep, t, Matrix::identity(rep.degree()), -sigma) == -sigma);
    CHECK(cocycle_from_rep(rep) - cocycle_from_rep(t) == coboundary(rep.algebra, sigma));
  }
}

TEST_CASE("conjugating by a random f gives an equivalent rep with the same cocycle") {
  std::mt19937_64 rng(17);
  ProjectiveRep rep = fixtures::heisenberg_alpha_rep();
  Matrix f = fixtures::random_invertible(rng, 3);
  Matrix f_inv = *inverse(f);
  LinearFunctional delta{Vector{1, Scalar::imag_unit(), -2}};
  ProjectiveRep moved{rep.algebra, {}, std::nullopt};
  for (std::size_t k = 0; k < 3; ++k) {
    moved.matrices.push_back(f * rep.matrices[k] * f_inv + Matrix::scalar(3, delta.values[k]));
  }
  CHECK(verify_projective_equivalence(rep, moved, f, delta).ok());
  CHECK(cohomologous_witness_from_equivalence(rep, moved, f, delta) == delta);
  CHECK(cocycle_from_rep(moved) - cocycle_from_rep(rep) == coboundary(rep.algebra, delta));
}

TEST_CASE("image of a vector") {
  ProjectiveRep rep = fixtures::heisenberg_alpha_rep();
  CHECK(rep.image(Vector{1, 1, 0}) == e(3, 0, 1) + e(3, 1, 2));
  CHECK(error_code([&] { rep.image(Vector{1}); }) == "DimensionMismatch");
}
