#include "plesken/cohomology.hpp"

#include <algorithm>

#include "plesken/error.hpp"

namespace plesken {

BilinearForm::BilinearForm(Matrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) throw Error("NotAlternating", "form matrix is not square");
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    if (!matrix_(i, i).is_zero()) throw Error("NotAlternating", "nonzero diagonal entry", {{"i", i}, {"j", i}});
    for (std::size_t j = i + 1; j < matrix_.rows(); ++j) {
      if (!(matrix_(i, j) == -matrix_(j, i))) {
        throw Error("NotAlternating", "form is not antisymmetric", {{"i", i}, {"j", j}});
      }
    }
  }
}

BilinearForm BilinearForm::from_upper(std::size_t n, std::span<const Scalar> upper) {
  if (upper.size() != pair_count(n)) {
    throw Error("DimensionMismatch", "upper-triangle length does not match dimension",
                {{"dim", n}, {"length", upper.size()}});
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = upper[pair_index(n, i, j)];
      m(j, i) = -m(i, j);
    }
  }
  return BilinearForm(std::move(m));
}

Vector BilinearForm::upper() const {
  const std::size_t n = dim();
  Vector u(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) u[pair_index(n, i, j)] = matrix_(i, j);
  }
  return u;
}

Scalar BilinearForm::evaluate(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != dim() || v.size() != dim()) {
    throw Error("DimensionMismatch", "form operands have wrong length", {{"dim", dim()}});
  }
  return dot(u, matrix_ * v);
}

Scalar cocycle_residual(const LieAlgebra& L, const BilinearForm& alpha, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  if (i >= n || j >= n || k >= n) {
    throw Error("IndexOutOfRange", "cocycle residual index out of range", {{"i", i}, {"j", j}, {"k", k}});
  }
  if (alpha.dim() != n) throw Error("DimensionMismatch", "form and algebra dimensions differ");
  // alpha([x_a, x_b], x_c) = sum_m c_ab^m alpha(x_m, x_c)
  Scalar r;
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Vector& ab = L.structure()[pair_index(n, std::min(a, b), std::max(a, b))];
    for (std::size_t m = 0; m < n; ++m) {
      if (ab[m].is_zero() || alpha(m, c).is_zero()) continue;
      if (a < b) {
        r += ab[m] * alpha(m, c);
      } else {
        r -= ab[m] * alpha(m, c);
      }
    }
  };
  if (i == j || j == k || k == i) {
    return alpha.evaluate(L.bracket_basis(i, j), unit_vector(n, k)) +
           alpha.evaluate(L.bracket_basis(j, k), unit_vector(n, i)) +
           alpha.evaluate(L.bracket_basis(k, i), unit_vector(n, j));
  }
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  return r;
}

CocycleCheck is_cocycle(const LieAlgebra& L, const BilinearForm& alpha) {
  const std::size_t n = L.dim();
  if (alpha.dim() != n) throw Error("DimensionMismatch", "form and algebra dimensions differ");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!cocycle_residual(L, alpha, i, j, k).is_zero()) return {false, std::array{i, j, k}};
      }
    }
  }
  return {};
}

Matrix coboundary_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix d(pair_count(n), n);
  for (std::size_t p = 0; p < pair_count(n); ++p) {
    for (std::size_t k = 0; k < n; ++k) d(p, k) = -L.structure()[p][k];
  }
  return d;
}

BilinearForm coboundary(const LieAlgebra& L, const LinearFunctional& sigma) {
  if (sigma.dim() != L.dim()) throw Error("DimensionMismatch", "functional and algebra dimensions differ");
  return BilinearForm::from_upper(L.dim(), coboundary_matrix(L) * sigma.values);
}

Matrix cocycle_constraints(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // alpha(x_m, x_k) in terms of upper-triangle coordinate u: +u(m,k) for
  // m < k, -u(k,m) for m > k.
  auto accumulate = [n](Matrix& row_matrix, std::size_t row, const Vector& c, std::size_t k) {
    for (std::size_t m = 0; m < n; ++m) {
      if (c[m].is_zero() || m == k) continue;
      if (m < k) {
        row_matrix(row, pair_index(n, m, k)) += c[m];
      } else {
        row_matrix(row, pair_index(n, k, m)) -= c[m];
      }
    }
  };
  std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  Matrix constraints(triples, pair_count(n));
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        accumulate(constraints, row, L.bracket_basis(i, j), k);
        accumulate(constraints, row, L.bracket_basis(j, k), i);
        accumulate(constraints, row, L.bracket_basis(k, i), j);
        ++row;
      }
    }
  }
  return constraints;
}

Subspace z2_basis(const LieAlgebra& L) {
  const std::size_t coords = pair_count(L.dim());
  if (coords == 0) return Subspace(0);
  return Subspace(coords, nullspace_basis(cocycle_constraints(L)));
}

Subspace b2_basis(const LieAlgebra& L) {
  const std::size_t coords = pair_count(L.dim());
  Matrix d = coboundary_matrix(L);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    Vector col = d.column(k);
    if (!is_zero(col)) images.push_back(std::move(col));
  }
  return Subspace(coords, images);
}

SecondCohomology h2(const LieAlgebra& L) {
  Subspace z2 = z2_basis(L);
  Subspace b2 = b2_basis(L);
  if (!z2.contains(b2)) {
    throw Error("InternalInclusionViolation", "coboundary space is not contained in the cocycle space");
  }
  SecondCohomology out;
  out.dim_z2 = z2.dim();
  out.dim_b2 = b2.dim();
  out.dim = z2.dim() - b2.dim();

  std::vector<Vector> span = b2.basis();
  Subspace current = b2;
  for (const auto& z : z2.basis()) {
    Vector rest = current.reduce(z);
    if (is_zero(rest)) continue;
    std::size_t lead = 0;
    while (rest[lead].is_zero()) ++lead;
    rest = scale(Scalar(1) / rest[lead], rest);
    out.representatives.push_back(BilinearForm::from_upper(L.dim(), rest));
    span.push_back(std::move(rest));
    current = Subspace(z2.ambient_dim(), span);
  }
  return out;
}

std::optional<LinearFunctional> are_cohomologous(const LieAlgebra& L, const BilinearForm& alpha,
                                                 const BilinearForm& beta) {
  for (const auto* form : {&alpha, &beta}) {
    auto check = is_cocycle(L, *form);
    if (!check.ok) {
      const auto& w = *check.witness;
      throw Error("NotACocycle", "form violates the cocycle condition",
                  {{"which", form == &alpha ? "alpha" : "beta"}, {"i", w[0]}, {"j", w[1]}, {"k", w[2]}});
    }
  }
  Vector diff = sub(beta.upper(), alpha.upper());
  auto sigma = solve(coboundary_matrix(L), diff);
  if (!sigma) return std::nullopt;
  return LinearFunctional{std::move(*sigma)};
}

CohomologyClass::CohomologyClass(const LieAlgebra& L, BilinearForm representative)
    : representative_(std::move(representative)), b2_(b2_basis(L)) {
  auto check = is_cocycle(L, representative_);
  if (!check.ok) throw Error("NotACocycle", "class representative is not a cocycle");
}

bool CohomologyClass::operator==(const CohomologyClass& other) const {
  return b2_ == other.b2_ && b2_.contains(sub(representative_.upper(), other.representative_.upper()));
}

}  // namespace plesken
