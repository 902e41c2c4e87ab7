#include <doctest.h>

#include "helpers.hpp"
#include "plesken/fixtures.hpp"
#include "plesken/lie_algebra.hpp"

using namespace plesken;

namespace {

// index of the element with the given label
std::size_t find(const FiniteGroup& g, const std::string& label) {
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (g.label(k) == label) return k;
  }
  FAIL("missing label " << label);
  return 0;
}

}  // namespace

TEST_CASE("group algebra commutator") {
  FiniteGroup q8 = preset("quaternion8", 0);
  auto i_hat = GroupAlgebraElement::hat(q8, find(q8, "i"));
  auto j_hat = GroupAlgebraElement::hat(q8, find(q8, "j"));
  CHECK(group_algebra_commutator(q8, i_hat, i_hat).is_zero());
  GroupAlgebraElement c = group_algebra_commutator(q8, i_hat, j_hat);
  CHECK(c.coefficient(find(q8, "k")) == Scalar(4));
  CHECK(c.coefficient(find(q8, "-k")) == Scalar(-4));
  CHECK(c.terms().size() == 2);

  FiniteGroup c6 = preset("cyclic", 6);
  auto a = GroupAlgebraElement::hat(c6, 1);
  auto b = GroupAlgebraElement::hat(c6, 2);
  CHECK(group_algebra_commutator(c6, a, b).is_zero());
  CHECK(GroupAlgebraElement::hat(c6, 3).is_zero());  // involution
  CHECK(GroupAlgebraElement::hat(c6, 0).is_zero());  // identity
}

TEST_CASE("Plesken algebras of small groups") {
  auto [l5, b5] = plesken_algebra(preset("cyclic", 5));
  CHECK(l5.dim() == 2);
  CHECK(l5.is_abelian());

  auto [ld8, bd8] = plesken_algebra(preset("dihedral", 4));
  CHECK(ld8.dim() == 1);
  CHECK(ld8.labels() == std::vector<std::string>{"^a"});

  FiniteGroup q8 = preset("quaternion8", 0);
  auto [lq, bq] = plesken_algebra(q8);
  REQUIRE(lq.dim() == 3);
  CHECK(lq.labels() == std::vector<std::string>{"^i", "^j", "^k"});
  CHECK(lq.bracket_basis(0, 1) == Vector{0, 0, 4});
  CHECK(lq.bracket_basis(1, 2) == Vector{4, 0, 0});
  CHECK(lq.bracket_basis(2, 0) == Vector{0, 4, 0});
  CHECK(lq.bracket(Vector{1, 0, 0}, Vector{0, 1, 0}) == Vector{0, 0, 4});
  CHECK(lq.origin().has_value());

  CHECK(plesken_algebra(preset("cyclic", 2)).algebra.dim() == 0);
  CHECK(plesken_algebra(from_cayley_table({{0}})).algebra.dim() == 0);
}

TEST_CASE("Plesken dimension formula and Jacobi on fixture groups") {
  for (const auto& [name, g] : fixtures::groups(24)) {
    CAPTURE(name);
    auto [L, basis] = plesken_algebra(g);
    CHECK(2 * L.dim() == g.order() - self_inverse_count(g));
    CHECK(verify_lie_axioms(L).empty());
    CHECK(basis.pairs.size() == L.dim());
    for (std::size_t k = 0; k + 1 < basis.pairs.size(); ++k) CHECK(basis.pairs[k].first < basis.pairs[k + 1].first);
  }
}

TEST_CASE("Plesken coordinates") {
  FiniteGroup q8 = preset("quaternion8", 0);
  auto [L, basis] = plesken_algebra(q8);
  auto u = GroupAlgebraElement::hat(q8, find(q8, "-j"));  // = -j^
  CHECK(plesken_coordinates(q8, basis, u) == Vector{0, -1, 0});
  GroupAlgebraElement g;
  g.add(find(q8, "i"), Scalar(1));
  CHECK(error_code([&] { plesken_coordinates(q8, basis, g); }) == "NotInPleskenSpan");
}

TEST_CASE("bracket properties") {
  LieAlgebra L = sl2_algebra();
  Vector u{1, 2, Scalar::imag_unit()};
  Vector v{Scalar::fraction(1, 3), 0, -1};
  CHECK(is_zero(L.bracket(u, u)));
  CHECK(is_zero(L.bracket(u, zero_vector(3))));
  CHECK(L.bracket(u, v) == scale(Scalar(-1), L.bracket(v, u)));
  CHECK(error_code([&] { L.bracket(Vector{1, 2}, v); }) == "DimensionMismatch");
  CHECK(error_code([&] { L.bracket_basis(0, 3); }) == "IndexOutOfRange");
}

TEST_CASE("structure constant tables") {
  CHECK(from_structure_constants(0, {}).dim() == 0);
  CHECK(verify_lie_axioms(from_structure_constants(2, {{0, 1, {1, 0}}})).empty());

  // any table of the cyclic shape [x1,x2]=a x3, [x2,x3]=b x1, [x3,x1]=c x2 is a Lie algebra
  LieAlgebra cyclic = from_structure_constants(3, {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 2, 0}}});
  CHECK(verify_lie_axioms(cyclic).empty());

  std::vector<BracketEntry> bad = {{0, 1, {0, 0, 1}}, {0, 2, {1, 0, 0}}};
  CHECK(error_code([&] { from_structure_constants(3, bad); }) == "JacobiViolation");
  LieAlgebra forced = from_structure_constants(3, bad, {}, true);
  auto failures = verify_lie_axioms(forced);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].i == 0);
  CHECK(failures[0].j == 1);
  CHECK(failures[0].k == 2);
  CHECK(failures[0].value == Vector{0, 0, -1});

  CHECK(error_code([] { from_structure_constants(2, {{0, 0, {1, 0}}}); }) == "NotAlternating");
  CHECK(error_code([] { from_structure_constants(2, {{0, 2, {1, 0}}}); }) == "IndexOutOfRange");
  CHECK(error_code([] { from_structure_constants(2, {{0, 1, {1}}}); }) == "DimensionMismatch");
  CHECK(error_code([] { from_structure_constants(2, {{0, 1, {1, 0}}, {1, 0, {1, 0}}}); }) == "MalformedAlgebra");
  // a consistent restatement of the same bracket is fine
  CHECK(from_structure_constants(2, {{0, 1, {1, 0}}, {1, 0, {-1, 0}}}).bracket_basis(0, 1) == Vector{1, 0});

  LieAlgebra sl2 = sl2_algebra();
  CHECK(sl2.bracket_basis(0, 1) == Vector{0, 2, 0});
  CHECK(sl2.bracket_basis(0, 2) == Vector{0, 0, -2});
  CHECK(sl2.bracket_basis(1, 2) == Vector{1, 0, 0});
}

TEST_CASE("center and derived subalgebra") {
  CHECK(center(abelian_algebra(2)).dim() == 2);
  CHECK(derived_subalgebra(abelian_algebra(2)).dim() == 0);
  LieAlgebra q8 = plesken_algebra(preset("quaternion8", 0)).algebra;
  CHECK(center(q8).dim() == 0);
  CHECK(derived_subalgebra(q8).dim() == 3);
  LieAlgebra heis = heisenberg_algebra();
  CHECK(center(heis) == Subspace(3, {Vector{0, 0, 1}}));
  CHECK(derived_subalgebra(heis) == Subspace(3, {Vector{0, 0, 1}}));
  CHECK(heis.labels() == std::vector<std::string>{"X", "Y", "Z"});
}

TEST_CASE("Killing form and semisimplicity") {
  CHECK(killing_form(abelian_algebra(3)).is_zero());
  CHECK_FALSE(is_semisimple(abelian_algebra(3)));
  CHECK(killing_form(heisenberg_algebra()).is_zero());
  CHECK_FALSE(is_semisimple(heisenberg_algebra()));

  LieAlgebra q8 = plesken_algebra(preset("quaternion8", 0)).algebra;
  Matrix k = killing_form(q8);
  CHECK(k == Matrix::scalar(3, Scalar(-32)));
  CHECK(is_semisimple(q8));
  CHECK(is_semisimple(sl2_algebra()));
  CHECK(killing_form(sl2_algebra())(0, 0) == Scalar(8));
  CHECK(adjoint_matrix(q8, 0) == adjoint_matrix(q8, Vector{1, 0, 0}));
}

TEST_CASE("closed bracket identity on a nonabelian group") {
  FiniteGroup g = preset("symmetric", 4);
  auto [L, basis] = plesken_algebra(g);
  for (std::size_t a = 0; a < basis.pairs.size(); ++a) {
    for (std::size_t b = 0; b < basis.pairs.size(); ++b) {
      std::size_t x = basis.pairs[a].first, y = basis.pairs[b].first;
      std::size_t xi = g.inverse(x), yi = g.inverse(y);
      GroupAlgebraElement closed = GroupAlgebraElement::hat(g, g.mul(x, y));
      closed += GroupAlgebraElement::hat(g, g.mul(xi, yi));
      closed -= GroupAlgebraElement::hat(g, g.mul(x, yi));
      closed -= GroupAlgebraElement::hat(g, g.mul(xi, y));
      CHECK(closed == group_algebra_commutator(g, GroupAlgebraElement::hat(g, x), GroupAlgebraElement::hat(g, y)));
    }
  }
}

TEST_CASE("algebra presets") {
  CHECK(algebra_preset("abelian", 4).dim() == 4);
  CHECK(algebra_preset("heis3").same_structure(heisenberg_algebra()));
  CHECK(algebra_preset("sl2").same_structure(sl2_algebra()));
  CHECK(error_code([] { algebra_preset("so3"); }) == "UnknownPreset");
}
