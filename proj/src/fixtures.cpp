#include "plesken/fixtures.hpp"

namespace plesken::fixtures {

std::vector<NamedGroup> groups(std::size_t max_order) {
  std::vector<NamedGroup> all;
  for (long n = 2; n <= 8; ++n) all.push_back({"cyclic" + std::to_string(n), preset("cyclic", n)});
  all.push_back({"dihedral8", preset("dihedral", 4)});
  all.push_back({"symmetric3", preset("symmetric", 3)});
  all.push_back({"quaternion8", preset("quaternion8", 0)});
  all.push_back({"elementary_abelian9", preset("elementary_abelian_p2", 3)});
  all.push_back({"heisenberg27", preset("heisenberg_p", 3)});
  std::vector<NamedGroup> kept;
  for (auto& g : all) {
    if (g.group.order() <= max_order) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<NamedAlgebra> algebras(std::size_t max_order) {
  std::vector<NamedAlgebra> out;
  for (const auto& g : groups(max_order)) out.push_back({"L(" + g.name + ")", plesken_algebra(g.group).algebra});
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"abelian" + std::to_string(n), abelian_algebra(n)});
  out.push_back({"heis3", heisenberg_algebra()});
  out.push_back({"sl2", sl2_algebra()});
  return out;
}

CentralExtension heisenberg_extension() {
  LieAlgebra plane = from_structure_constants(2, {}, {"X", "Y"});
  CentralExtension ext;
  ext.base = plane;
  ext.total = heisenberg_algebra();
  ext.injection = {0, 0, 1};
  ext.projection = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}});
  return ext;
}

DihedralPair dihedral_pair() {
  LieAlgebra L = plesken_algebra(preset("dihedral", 4)).algebra;
  const Scalar i = Scalar::imag_unit();
  const Scalar half = Scalar::fraction(1, 2);
  Matrix phi1 = Matrix::from_rows({{0, 2}, {-2, 0}});
  Matrix phi2 = Matrix::from_rows({{Scalar(2) * i, 0}, {0, Scalar(-2) * i}});
  Matrix f = Matrix::from_rows({{half, -half * i}, {half, half * i}});
  return {L, {L, {phi1}, std::nullopt}, {L, {phi2}, std::nullopt}, f};
}

ProjectiveRep heisenberg_alpha_rep() {
  LieAlgebra L = heisenberg_algebra();
  Matrix x(3, 3), y(3, 3), z = Scalar(-1) * Matrix::identity(3);
  x(0, 1) = 1;
  y(1, 2) = 1;
  z(0, 2) = 1;
  return {L, {x, y, z}, BilinearForm::from_upper(3, Vector{1, 0, 0})};
}

std::vector<NamedRep> reps(std::size_t max_order) {
  std::vector<NamedRep> out;
  for (const auto& a : algebras(max_order)) {
    if (a.algebra.dim() == 0) continue;
    out.push_back({"ad " + a.name, adjoint_rep(a.algebra)});
  }
  LieAlgebra sl2 = sl2_algebra();
  Matrix h = Matrix::from_rows({{1, 0}, {0, -1}});
  Matrix e = Matrix::from_rows({{0, 1}, {0, 0}});
  Matrix f = Matrix::from_rows({{0, 0}, {1, 0}});
  out.push_back({"sl2 defining", lift_linear(sl2, {h, e, f})});
  out.push_back({"heis3 alpha-rep", heisenberg_alpha_rep()});
  auto pair = dihedral_pair();
  out.push_back({"L(dihedral8) rotation", pair.first});
  out.push_back({"L(dihedral8) diagonal", pair.second});
  return out;
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  Scalar s = Scalar::fraction(num(rng), den(rng));
  if (coin(rng) == 0) s += Scalar::fraction(num(rng), den(rng)) * Scalar::imag_unit();
  return s;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_scalar(rng);
  return v;
}

Vector random_element(std::mt19937_64& rng, const Subspace& space) {
  Vector v(space.ambient_dim());
  for (const auto& b : space.basis()) v = add(v, scale(random_scalar(rng), b));
  return v;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  // integer entries, det = +-1, so the inverse stays integral
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (std::size_t r = 0; r < n; ++r) {
    upper(r, r) = Scalar(sign(rng) ? 1 : -1);
    for (std::size_t c = 0; c < r; ++c) lower(r, c) = Scalar(entry(rng));
    for (std::size_t c = r + 1; c < n; ++c) upper(r, c) = Scalar(entry(rng));
  }
  return lower * upper;
}

}  // namespace plesken::fixtures
