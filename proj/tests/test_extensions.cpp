#include <doctest.h>

#include "helpers.hpp"
#include "plesken/extension.hpp"
#include "plesken/fixtures.hpp"

#include <random>

using namespace plesken;

namespace {

BilinearForm form(std::size_t n, Vector upper) { return BilinearForm::from_upper(n, upper); }

}  // namespace

TEST_CASE("extension from the zero cocycle is a split direct sum") {
  LieAlgebra L = sl2_algebra();
  CentralExtension e = extension_from_cocycle(L, BilinearForm::zero(3));
  CHECK(verify_central_extension(e).empty());
  CHECK(e.total.dim() == 4);
  CHECK(e.injection == Vector{0, 0, 0, 1});
  CHECK(e.total.bracket_basis(0, 1) == Vector{0, 2, 0, 0});
  CHECK(e.total.bracket_basis(2, 3) == Vector{0, 0, 0, 0});
  CHECK(cocycle_from_extension(e, *e.section) == BilinearForm::zero(3));
  SplitResult s = is_split(e);
  CHECK(s.split);
  REQUIRE(s.homomorphic_section);
  CHECK(*s.homomorphic_section == *e.section);
}

TEST_CASE("abelian plane with alpha = 1 gives heis3") {
  CentralExtension e = extension_from_cocycle(abelian_algebra(2), form(2, {1}));
  CHECK(e.total.same_structure(heisenberg_algebra()));
  CHECK(verify_central_extension(e).empty());
  CHECK_FALSE(is_split(e).split);
}

TEST_CASE("heisenberg fixture") {
  CentralExtension e = fixtures::heisenberg_extension();
  CHECK(verify_central_extension(e).empty());
  Matrix s = find_section(e);
  CHECK(s == Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(cocycle_from_extension(e, s) == form(2, {1}));
  SplitResult split = is_split(e);
  CHECK_FALSE(split.split);
  CHECK_FALSE(split.homomorphic_section);
}

TEST_CASE("broken extension data is reported") {
  CentralExtension e = fixtures::heisenberg_extension();
  CentralExtension not_central = e;
  not_central.injection = {1, 0, 0};
  not_central.projection = Matrix::from_rows({{0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(verify_central_extension(not_central).empty());

  CentralExtension not_exact = e;
  not_exact.projection = Matrix::from_rows({{1, 0, 1}, {0, 1, 0}});
  CHECK_FALSE(verify_central_extension(not_exact).empty());

  CentralExtension no_hom = e;
  no_hom.base = from_structure_constants(2, {{0, 1, {1, 0}}});
  CHECK_FALSE(verify_central_extension(no_hom).empty());

  CHECK(error_code([&] { cocycle_from_extension(e, Matrix::from_rows({{1, 0}, {1, 0}, {0, 0}})); }) == "NotASection");
  CHECK(error_code([&] { extension_from_cocycle(from_structure_constants(3, {{0, 1, {0, 1, 0}}}), form(3, {0, 0, 1})); }) ==
        "NotACocycle");
  CentralExtension degenerate = e;
  degenerate.projection = Matrix(2, 3);
  CHECK(error_code([&] { find_section(degenerate); }) == "NoSection");
}

TEST_CASE("the cocycle does not depend on the section up to coboundaries") {
  CentralExtension e = fixtures::heisenberg_extension();
  Matrix s = find_section(e);
  // shift both section columns by multiples of f
  Matrix s2 = s;
  s2(2, 0) = Scalar(3);
  s2(2, 1) = Scalar::fraction(-1, 2);
  BilinearForm a = cocycle_from_extension(e, s);
  BilinearForm b = cocycle_from_extension(e, s2);
  CHECK(are_cohomologous(e.base, a, b).has_value());

  CentralExtension sl = extension_from_cocycle(sl2_algebra(), BilinearForm::zero(3));
  Matrix t = *sl.section;
  t(3, 0) = Scalar(1);
  BilinearForm shifted = cocycle_from_extension(sl, t);
  CHECK_FALSE(shifted == BilinearForm::zero(3));
  auto sigma = are_cohomologous(sl2_algebra(), BilinearForm::zero(3), shifted);
  REQUIRE(sigma);
  CHECK(coboundary(sl2_algebra(), *sigma) == shifted);
}

TEST_CASE("equivalence maps") {
  CentralExtension e = fixtures::heisenberg_extension();
  auto self = equivalence_map(e, e);
  REQUIRE(self);
  CHECK(*self == Matrix::identity(3));

  LieAlgebra plane = abelian_algebra(2);
  CentralExtension split = extension_from_cocycle(plane, BilinearForm::zero(2));
  CentralExtension heis = extension_from_cocycle(plane, form(2, {1}));
  CHECK_FALSE(equivalence_map(split, heis));
  CHECK_FALSE(verify_equivalence_map(split, heis, Matrix::identity(3)).empty());
  CHECK_FALSE(verify_equivalence_map(split, split, Scalar(2) * Matrix::identity(3)).empty());
  CHECK(error_code([&] { equivalence_map(split, extension_from_cocycle(sl2_algebra(), BilinearForm::zero(3))); }) ==
        "BaseMismatch");

  LieAlgebra heis3 = heisenberg_algebra();
  BilinearForm a = form(3, {0, 1, 0});
  BilinearForm b = a + coboundary(heis3, {Vector{1, -2, 5}});
  CentralExtension e1 = extension_from_cocycle(heis3, a);
  CentralExtension e2 = extension_from_cocycle(heis3, b);
  auto phi = equivalence_map(e1, e2);
  REQUIRE(phi);
  CHECK(verify_equivalence_map(e1, e2, *phi).empty());
}

TEST_CASE("change of total basis preserves the extension") {
  std::mt19937_64 rng(5);
  LieAlgebra heis3 = heisenberg_algebra();
  CentralExtension e = extension_from_cocycle(heis3, form(3, {0, 1, 1}));
  for (int k = 0; k < 5; ++k) {
    Matrix t = fixtures::random_invertible(rng, 4);
    CentralExtension moved = change_total_basis(e, t);
    CHECK(verify_central_extension(moved).empty());
    CHECK(moved.injection == t * e.injection);
    auto phi = equivalence_map(e, moved);
    REQUIRE(phi);
    CHECK(verify_equivalence_map(e, moved, *phi).empty());
    CHECK(is_split(moved).split == is_split(e).split);
    CHECK(are_cohomologous(heis3, cocycle_from_extension(moved, find_section(moved)), form(3, {0, 1, 1})));
  }
  CHECK(error_code([&] { change_total_basis(e, Matrix(4, 4)); }) == "SingularChangeOfBasis");
}

TEST_CASE("every extension of L(Q8) splits") {
  LieAlgebra L = plesken_algebra(preset("quaternion8", 0)).algebra;
  Subspace z2 = z2_basis(L);
  for (const auto& v : z2.basis()) {
    CentralExtension e = extension_from_cocycle(L, BilinearForm::from_upper(3, v));
    SplitResult s = is_split(e);
    REQUIRE(s.split);
    CHECK(is_homomorphism(L, e.total, *s.homomorphic_section));
    CHECK(e.projection * *s.homomorphic_section == Matrix::identity(3));
  }
}

TEST_CASE("split detection on a split extension in disguise") {
  LieAlgebra heis3 = heisenberg_algebra();
  // alpha is a coboundary, so the extension splits although alpha != 0
  BilinearForm a = coboundary(heis3, {Vector{0, 0, 2}});
  CHECK_FALSE(a == BilinearForm::zero(3));
  SplitResult s = is_split(extension_from_cocycle(heis3, a));
  CHECK(s.split);
}

TEST_CASE("zero-dimensional base") {
  CentralExtension e = extension_from_cocycle(abelian_algebra(0), BilinearForm::zero(0));
  CHECK(e.total.dim() == 1);
  CHECK(verify_central_extension(e).empty());
  CHECK(is_split(e).split);
}
