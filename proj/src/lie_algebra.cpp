#include "plesken/lie_algebra.hpp"

#include "plesken/error.hpp"

#include <stdexcept>

namespace plesken {

GroupAlgebraElement GroupAlgebraElement::hat(const FiniteGroup& group, std::size_t g) {
  GroupAlgebraElement u;
  u.add(g, 1);
  u.add(group.inverse(g), -1);
  return u;
}

void GroupAlgebraElement::add(std::size_t element, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(element, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar GroupAlgebraElement::coefficient(std::size_t element) const {
  auto it = terms_.find(element);
  return it == terms_.end() ? Scalar() : it->second;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

GroupAlgebraElement group_algebra_product(const FiniteGroup& group, const GroupAlgebraElement& u,
                                          const GroupAlgebraElement& v) {
  GroupAlgebraElement out;
  for (const auto& [g, a] : u.terms()) {
    for (const auto& [h, b] : v.terms()) out.add(group.mul(g, h), a * b);
  }
  return out;
}

GroupAlgebraElement group_algebra_commutator(const FiniteGroup& group, const GroupAlgebraElement& u,
                                             const GroupAlgebraElement& v) {
  return group_algebra_product(group, u, v) - group_algebra_product(group, v, u);
}

LieAlgebra LieAlgebra::from_pair_table(std::size_t dim, std::vector<Vector> structure, std::vector<std::string> labels,
                                       std::optional<PleskenOrigin> origin) {
  if (structure.size() != pair_count(dim)) throw std::invalid_argument("from_pair_table: wrong pair count");
  for (const auto& c : structure) {
    if (c.size() != dim) throw std::invalid_argument("from_pair_table: wrong vector length");
  }
  if (labels.empty()) {
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("x" + std::to_string(k));
  } else if (labels.size() != dim) {
    throw Error("MalformedAlgebra", "label count does not match dimension", {{"labels", labels.size()}});
  }
  LieAlgebra L;
  L.dim_ = dim;
  L.structure_ = std::move(structure);
  L.labels_ = std::move(labels);
  L.origin_ = std::move(origin);
  return L;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error("IndexOutOfRange", "basis index out of range", {{"i", i}, {"j", j}});
  if (i == j) return zero_vector(dim_);
  if (i < j) return structure_[pair_index(dim_, i, j)];
  return scale(Scalar(-1), structure_[pair_index(dim_, j, i)]);
}

Vector LieAlgebra::bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != dim_ || v.size() != dim_) {
    throw Error("DimensionMismatch", "bracket operands have wrong length",
                {{"dim", dim_}, {"u", u.size()}, {"v", v.size()}});
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      // u_i v_j [x_i, x_j] + u_j v_i [x_j, x_i]
      Scalar w = u[i] * v[j] - u[j] * v[i];
      if (w.is_zero()) continue;
      const Vector& c = structure_[pair_index(dim_, i, j)];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : structure_) {
    if (!is_zero(c)) return false;
  }
  return true;
}

LieAlgebra from_structure_constants(std::size_t dim, const std::vector<BracketEntry>& entries,
                                    std::vector<std::string> labels, bool force) {
  std::vector<Vector> structure(pair_count(dim), zero_vector(dim));
  std::vector<bool> set(structure.size(), false);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) {
      throw Error("IndexOutOfRange", "bracket entry index out of range", {{"i", e.i}, {"j", e.j}});
    }
    if (e.c.size() != dim) {
      throw Error("DimensionMismatch", "bracket vector has wrong length", {{"i", e.i}, {"j", e.j}});
    }
    if (e.i == e.j) {
      if (!is_zero(e.c)) throw Error("NotAlternating", "[x_i, x_i] must vanish", {{"i", e.i}});
      continue;
    }
    bool flip = e.i > e.j;
    std::size_t p = flip ? pair_index(dim, e.j, e.i) : pair_index(dim, e.i, e.j);
    Vector c = flip ? scale(Scalar(-1), e.c) : e.c;
    if (set[p] && !(structure[p] == c)) {
      throw Error("MalformedAlgebra", "conflicting entries for one pair", {{"i", e.i}, {"j", e.j}});
    }
    structure[p] = std::move(c);
    set[p] = true;
  }
  LieAlgebra L = LieAlgebra::from_pair_table(dim, std::move(structure), std::move(labels));
  if (!force) {
    auto failures = verify_lie_axioms(L);
    if (!failures.empty()) {
      const auto& f = failures.front();
      throw Error("JacobiViolation", "Jacobi identity fails on a basis triple", {{"i", f.i}, {"j", f.j}, {"k", f.k}});
    }
  }
  return L;
}

PleskenBasis plesken_basis(const FiniteGroup& group) {
  PleskenBasis basis;
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::size_t inv = group.inverse(g);
    if (g < inv) basis.pairs.emplace_back(g, inv);
  }
  return basis;
}

Vector plesken_coordinates(const FiniteGroup& group, const PleskenBasis& basis, const GroupAlgebraElement& u) {
  std::vector<std::size_t> slot(group.order(), basis.pairs.size());
  for (std::size_t k = 0; k < basis.pairs.size(); ++k) slot[basis.pairs[k].first] = k;
  Vector coords(basis.pairs.size());
  for (const auto& [g, c] : u.terms()) {
    std::size_t inv = group.inverse(g);
    if (inv == g || !(u.coefficient(inv) == -c)) {
      throw Error("NotInPleskenSpan", "element is not a combination of g - g^-1", {{"element", g}});
    }
    if (slot[g] != basis.pairs.size()) coords[slot[g]] = c;
  }
  return coords;
}

PleskenConstruction plesken_algebra(const FiniteGroup& group) {
  PleskenBasis basis = plesken_basis(group);
  const std::size_t n = basis.pairs.size();
  std::vector<GroupAlgebraElement> hats;
  std::vector<std::string> labels;
  for (const auto& [g, inv] : basis.pairs) {
    hats.push_back(GroupAlgebraElement::hat(group, g));
    labels.push_back("^" + group.label(g));
  }
  std::vector<Vector> structure(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      structure[pair_index(n, i, j)] =
          plesken_coordinates(group, basis, group_algebra_commutator(group, hats[i], hats[j]));
    }
  }
  PleskenOrigin origin{std::make_shared<const FiniteGroup>(group), basis};
  LieAlgebra L = LieAlgebra::from_pair_table(n, std::move(structure), std::move(labels), std::move(origin));
  return {std::move(L), std::move(basis)};
}

namespace {

// acc += [c, x_k] for a coordinate vector c
void add_bracket_with_basis(const LieAlgebra& L, const Vector& c, std::size_t k, Vector& acc) {
  for (std::size_t m = 0; m < L.dim(); ++m) {
    if (c[m].is_zero() || m == k) continue;
    const Vector& mk = L.structure()[m < k ? pair_index(L.dim(), m, k) : pair_index(L.dim(), k, m)];
    const Scalar w = m < k ? c[m] : -c[m];
    for (std::size_t t = 0; t < L.dim(); ++t) {
      if (!mk[t].is_zero()) acc[t] += w * mk[t];
    }
  }
}

}  // namespace

std::vector<JacobiFailure> verify_lie_axioms(const LieAlgebra& L) {
  std::vector<JacobiFailure> failures;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum(n);
        add_bracket_with_basis(L, L.structure()[pair_index(n, i, j)], k, sum);
        add_bracket_with_basis(L, L.structure()[pair_index(n, j, k)], i, sum);
        add_bracket_with_basis(L, L.bracket_basis(k, i), j, sum);
        if (!is_zero(sum)) failures.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return failures;
}

Matrix adjoint_matrix(const LieAlgebra& L, std::size_t i) {
  Matrix ad(L.dim(), L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) ad.set_column(j, L.bracket_basis(i, j));
  return ad;
}

Matrix adjoint_matrix(const LieAlgebra& L, std::span<const Scalar> v) {
  Matrix ad(L.dim(), L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) ad.set_column(j, L.bracket(v, unit_vector(L.dim(), j)));
  return ad;
}

Subspace center(const LieAlgebra& L) {
  // v is central iff sum_i v_i [x_i, x_j] = 0 for every j: stack the maps
  // v -> [v, x_j], whose matrix has column i equal to [x_i, x_j].
  const std::size_t n = L.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector c = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = c[k];
    }
  }
  return Subspace(n, nullspace_basis(stacked));
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  std::vector<Vector> spanning;
  for (const auto& c : L.structure()) {
    if (!is_zero(c)) spanning.push_back(c);
  }
  return Subspace(L.dim(), spanning);
}

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint_matrix(L, i));
  Matrix K(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      K(i, j) = (ads[i] * ads[j]).trace();
      K(j, i) = K(i, j);
    }
  }
  return K;
}

bool is_semisimple(const LieAlgebra& L) { return !determinant(killing_form(L)).is_zero(); }

LieAlgebra abelian_algebra(std::size_t n) {
  return LieAlgebra::from_pair_table(n, std::vector<Vector>(pair_count(n), zero_vector(n)));
}

LieAlgebra heisenberg_algebra() {
  return from_structure_constants(3, {{0, 1, {0, 0, 1}}}, {"X", "Y", "Z"});
}

LieAlgebra sl2_algebra() {
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  return from_structure_constants(3, {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}}, {"h", "e", "f"});
}

LieAlgebra algebra_preset(std::string_view name, long parameter) {
  if (name == "abelian") {
    if (parameter < 0) {
      throw Error("BadParameter", "dimension must be >= 0", {{"preset", name}, {"parameter", parameter}});
    }
    return abelian_algebra(static_cast<std::size_t>(parameter));
  }
  if (name == "heis3") return heisenberg_algebra();
  if (name == "sl2") return sl2_algebra();
  throw Error("UnknownPreset", "unknown algebra preset '" + std::string(name) + "'", {{"preset", name}});
}

}  // namespace plesken
