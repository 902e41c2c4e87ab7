#include <doctest.h>

#include "helpers.hpp"
#include "plesken/fixtures.hpp"
#include "plesken/json_io.hpp"

#include <random>

using namespace plesken;

TEST_CASE("scalars serialize as exact strings") {
  CHECK(io::to_json(Scalar::fraction(3, 2)) == "3/2");
  CHECK(io::scalar_from_json(Json("1/2-3/4*I")) == Scalar(Rational(1, 2), Rational(-3, 4)));
  CHECK(io::scalar_from_json(Json(5)) == Scalar(5));
  CHECK(error_code([] { io::scalar_from_json(Json(0.5)); }) == "BadJson");
  CHECK(error_code([] { io::scalar_from_json(Json("x")); }) == "BadJson");
}

TEST_CASE("group round trip") {
  for (const auto& [name, g] : fixtures::groups(27)) {
    CAPTURE(name);
    FiniteGroup back = io::group_from_json(io::parse(io::dump(io::group_to_json(g))));
    CHECK(back.table() == g.table());
    CHECK(back.labels() == g.labels());
  }
  Json bad = io::group_to_json(preset("cyclic", 3));
  bad["order"] = 4;
  CHECK(error_code([&] { io::group_from_json(bad); }) == "BadJson");
  bad = io::group_to_json(preset("cyclic", 3));
  bad["table"][0][0] = 7;
  CHECK(error_code([&] { io::group_from_json(bad); }) == "NotClosed");
}

TEST_CASE("algebra round trip") {
  for (const auto& [name, L] : fixtures::algebras(27)) {
    CAPTURE(name);
    Json j = io::algebra_to_json(L);
    LieAlgebra back = io::algebra_from_json(io::parse(io::dump(j)));
    CHECK(back.same_structure(L));
    CHECK(back.labels() == L.labels());
    CHECK(io::dump(io::algebra_to_json(back)) == io::dump(j));
  }
  Json heis = io::algebra_to_json(heisenberg_algebra());
  CHECK(heis["brackets"].size() == 1);
  CHECK(heis["brackets"][0]["c"] == Json({"0", "0", "1"}));
  Json bad = io::parse(R"({"dim": 3, "brackets": [{"i":0,"j":1,"c":[0,0,1]}, {"i":0,"j":2,"c":[1,0,0]}]})");
  CHECK(error_code([&] { io::algebra_from_json(bad); }) == "JacobiViolation");
  CHECK(error_code([] { io::algebra_from_json(io::parse(R"({"brackets": []})")); }) == "BadJson");
}

TEST_CASE("form, functional and matrix round trips") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {0u, 1u, 2u, 4u}) {
    BilinearForm a = BilinearForm::from_upper(n, fixtures::random_vector(rng, pair_count(n)));
    CHECK(io::form_from_json(io::parse(io::dump(io::form_to_json(a)))) == a);
  }
  CHECK(io::form_from_json(io::parse(R"({"dim": 3, "upper": ["1", "0", "2"]})")) ==
        BilinearForm::from_upper(3, Vector{1, 0, 2}));
  CHECK(error_code([] { io::form_from_json(io::parse(R"({"dim": 3, "upper": [["1"], ["2"]]})")); }) == "BadJson");
  LinearFunctional f{fixtures::random_vector(rng, 5)};
  CHECK(io::functional_from_json(io::functional_to_json(f)) == f);
  Matrix m = fixtures::random_invertible(rng, 3);
  CHECK(io::matrix_file_from_json(io::matrix_file_to_json(m)) == m);
  CHECK(io::matrix_file_from_json(io::to_json(m)) == m);
  CHECK(error_code([] { io::matrix_from_json(io::parse(R"([["1"], ["1", "2"]])")); }) == "BadJson");
}

TEST_CASE("extension round trip") {
  std::mt19937_64 rng(29);
  std::vector<CentralExtension> exts{fixtures::heisenberg_extension(),
                                     extension_from_cocycle(abelian_algebra(0), BilinearForm::zero(0))};
  for (const auto& [name, L] : fixtures::algebras(16)) {
    CentralExtension e = extension_from_cocycle(L, BilinearForm::zero(L.dim()));
    exts.push_back(change_total_basis(e, fixtures::random_invertible(rng, L.dim() + 1)));
  }
  for (const auto& e : exts) {
    Json j = io::extension_to_json(e);
    CentralExtension back = io::extension_from_json(io::parse(io::dump(j)));
    CHECK(back.total.same_structure(e.total));
    CHECK(back.base.same_structure(e.base));
    CHECK(back.injection == e.injection);
    CHECK(back.projection == e.projection);
    CHECK(back.section == e.section);
    CHECK(io::dump(io::extension_to_json(back)) == io::dump(j));
  }
}

TEST_CASE("rep round trip") {
  for (const auto& [name, rep] : fixtures::reps(16)) {
    CAPTURE(name);
    Json j = io::rep_to_json(rep);
    ProjectiveRep back = io::rep_from_json(io::parse(io::dump(j)), rep.algebra);
    CHECK(back.matrices == rep.matrices);
    CHECK(back.cocycle == rep.cocycle);
  }
  Json j = io::rep_to_json(fixtures::heisenberg_alpha_rep());
  CHECK(error_code([&] { io::rep_from_json(j, abelian_algebra(2)); }) == "BadJson");
}

TEST_CASE("io errors") {
  CHECK(error_code([] { io::parse("{not json"); }) == "BadJson");
  CHECK(error_code([] { io::read_file("/nonexistent/file.json"); }) == "IoError");
}
