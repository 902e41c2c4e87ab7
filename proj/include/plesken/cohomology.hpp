#pragma once

#include "plesken/lie_algebra.hpp"

#include <array>
#include <optional>

namespace plesken {

/// Alternating scalar form on L x L: alpha(x_i, x_j) = matrix(i, j).
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws Error("NotAlternating") unless m = -m^T with zero diagonal.
  explicit BilinearForm(Matrix m);

  static BilinearForm zero(std::size_t n) { return BilinearForm(Matrix(n, n)); }
  /// From strict-upper-triangle coordinates (0,1), (0,2), ..., (n-2,n-1).
  static BilinearForm from_upper(std::size_t n, std::span<const Scalar> upper);

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  Vector upper() const;

  Scalar evaluate(std::span<const Scalar> u, std::span<const Scalar> v) const;

  friend BilinearForm operator+(const BilinearForm& a, const BilinearForm& b) {
    return BilinearForm(a.matrix_ + b.matrix_);
  }
  friend BilinearForm operator-(const BilinearForm& a, const BilinearForm& b) {
    return BilinearForm(a.matrix_ - b.matrix_);
  }
  friend BilinearForm operator*(const Scalar& c, const BilinearForm& a) { return BilinearForm(c * a.matrix_); }
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix matrix_;
};

/// sigma(x_i) = values[i].
struct LinearFunctional {
  Vector values;

  static LinearFunctional zero(std::size_t n) { return {zero_vector(n)}; }
  std::size_t dim() const { return values.size(); }
  Scalar operator()(std::span<const Scalar> x) const { return dot(values, x); }
  LinearFunctional operator-() const { return {scale(Scalar(-1), values)}; }
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// alpha([x_i,x_j],x_k) + alpha([x_j,x_k],x_i) + alpha([x_k,x_i],x_j).
Scalar cocycle_residual(const LieAlgebra& L, const BilinearForm& alpha, std::size_t i, std::size_t j, std::size_t k);

struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // first failing i < j < k
};
CocycleCheck is_cocycle(const LieAlgebra& L, const BilinearForm& alpha);

/// The form (x, y) -> -sigma([x, y]).
BilinearForm coboundary(const LieAlgebra& L, const LinearFunctional& sigma);

/// Linear map C^1 -> C^2 (flattened) taking sigma to its coboundary.
Matrix coboundary_matrix(const LieAlgebra& L);
/// One row per triple i < j < k; kernel is Z^2 in flattened coordinates.
Matrix cocycle_constraints(const LieAlgebra& L);

Subspace z2_basis(const LieAlgebra& L);
Subspace b2_basis(const LieAlgebra& L);

struct SecondCohomology {
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t dim = 0;
  /// Complement of B^2 in Z^2: greedy extension of the B^2 echelon basis by
  /// the Z^2 echelon rows, each stored reduced modulo the span so far.
  std::vector<BilinearForm> representatives;
};
SecondCohomology h2(const LieAlgebra& L);

/// When beta - alpha is a coboundary, returns the canonical sigma with
/// beta - alpha = coboundary(sigma). Throws Error("NotACocycle").
std::optional<LinearFunctional> are_cohomologous(const LieAlgebra& L, const BilinearForm& alpha,
                                                 const BilinearForm& beta);

/// Cohomology class [alpha] together with the B^2 it is taken modulo.
class CohomologyClass {
 public:
  /// Throws Error("NotACocycle").
  CohomologyClass(const LieAlgebra& L, BilinearForm representative);

  const BilinearForm& representative() const { return representative_; }
  const Subspace& coboundaries() const { return b2_; }
  bool is_trivial() const { return b2_.contains(representative_.upper()); }
  bool operator==(const CohomologyClass& other) const;

 private:
  BilinearForm representative_;
  Subspace b2_;
};

}  // namespace plesken
