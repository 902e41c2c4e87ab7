#pragma once

#include "plesken/cohomology.hpp"

#include <optional>
#include <vector>

namespace plesken {

/// Linear map Phi from L into d x d matrices, stored as the images of the
/// basis, with its defect cocycle when known:
///   [Phi(x), Phi(y)] = alpha(x, y) I + Phi([x, y]).
struct ProjectiveRep {
  LieAlgebra algebra;
  std::vector<Matrix> matrices;
  std::optional<BilinearForm> cocycle;

  std::size_t degree() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  /// Phi(v) for a coordinate vector v.
  Matrix image(std::span<const Scalar> v) const;
};

/// Throws unless there is one square d x d matrix per basis vector, d >= 1.
void check_rep_shape(const LieAlgebra& L, const std::vector<Matrix>& matrices);

/// Reads alpha off the defects [Phi(x_i), Phi(x_j)] - Phi([x_i, x_j]).
/// Throws Error("DefectNotScalar") with the pair and offending entry.
BilinearForm cocycle_from_rep(const LieAlgebra& L, const std::vector<Matrix>& matrices);
BilinearForm cocycle_from_rep(const ProjectiveRep& rep);

struct AlphaRepFailure {
  std::size_t i, j;
  Matrix residual;  // [Phi(x_i), Phi(x_j)] - Phi([x_i,x_j]) - alpha(x_i,x_j) I
};
/// Empty iff Phi is an alpha-representation; sorted by (i, j).
std::vector<AlphaRepFailure> validate_alpha_rep(const LieAlgebra& L, const std::vector<Matrix>& matrices,
                                                const BilinearForm& alpha);

/// Wraps a Lie homomorphism as a projective rep with zero cocycle. Throws
/// Error("NotAHomomorphism").
ProjectiveRep lift_linear(const LieAlgebra& L, std::vector<Matrix> matrices);

/// Adjoint representation x -> ad x.
ProjectiveRep adjoint_rep(const LieAlgebra& L);

/// Phi'(x) = Phi(x) - sigma(x) I; the cocycle becomes alpha + sigma o bracket.
ProjectiveRep twist(const ProjectiveRep& rep, const LinearFunctional& sigma);

struct ProjectiveEquivalenceReport {
  std::vector<std::pair<std::size_t, Matrix>> failures;  // basis index, residual
  bool linear = false;                                   // delta == 0
  bool ok() const { return failures.empty(); }
};

/// Checks Phi2(x) = f Phi1(x) f^-1 + delta(x) I on every basis vector.
/// Throws Error("SingularF") and Error("DegreeMismatch").
ProjectiveEquivalenceReport verify_projective_equivalence(const ProjectiveRep& rep1, const ProjectiveRep& rep2,
                                                          const Matrix& f, const LinearFunctional& delta);

/// For a verified equivalence, alpha2 - alpha1 = coboundary(delta); returns
/// delta after confirming it with are_cohomologous. Throws
/// Error("NotEquivalent").
LinearFunctional cohomologous_witness_from_equivalence(const ProjectiveRep& rep1, const ProjectiveRep& rep2,
                                                       const Matrix& f, const LinearFunctional& delta);

}  // namespace plesken
