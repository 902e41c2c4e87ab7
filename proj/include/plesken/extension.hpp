#pragma once

#include "plesken/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plesken {

/// Central extension 0 -> C -f-> total -g-> base -> 0 with a
/// one-dimensional kernel.
struct CentralExtension {
  LieAlgebra total;               // dim n + 1
  LieAlgebra base;                // dim n
  Vector injection;               // f(1), length n + 1
  Matrix projection;              // g, n x (n + 1)
  std::optional<Matrix> section;  // s, (n + 1) x n, g s = I
};

/// Human-readable failures of the extension axioms; empty means valid.
/// Checks Jacobi on total, g a homomorphism, g f = 0 with rank g = n and f
/// nonzero, f central in total, and g s = I when a section is stored.
std::vector<std::string> verify_central_extension(const CentralExtension& ext);

/// base (+) C with [(x,c),(y,d)] = ([x,y], alpha(x,y)), f(c) = (0,c),
/// g(x,c) = x, s(x) = (x,0). Throws Error("NotACocycle").
CentralExtension extension_from_cocycle(const LieAlgebra& base, const BilinearForm& alpha);

/// Canonical right inverse of the projection. Throws Error("NoSection").
Matrix find_section(const CentralExtension& ext);

/// alpha(x_i, x_j) = [s(x_i), s(x_j)] - s([x_i, x_j]) measured in units of
/// f. Throws Error("NotASection") or Error("DefectNotInKernel").
BilinearForm cocycle_from_extension(const CentralExtension& ext, const Matrix& section);

/// Stored section if present, otherwise find_section.
Matrix section_of(const CentralExtension& ext);

/// Equivalence phi : total1 -> total2 commuting with f and g, built from the
/// cohomology witness between the two extracted cocycles. Throws
/// Error("BaseMismatch") when the bases differ.
std::optional<Matrix> equivalence_map(const CentralExtension& ext1, const CentralExtension& ext2);

/// Failures of: phi homomorphism, phi f1 = f2, g2 phi = g1, phi invertible.
std::vector<std::string> verify_equivalence_map(const CentralExtension& ext1, const CentralExtension& ext2,
                                                const Matrix& phi);

struct SplitResult {
  bool split = false;
  std::optional<Matrix> homomorphic_section;
};
SplitResult is_split(const CentralExtension& ext);

/// Same extension in new coordinates v' = T v on the total algebra.
/// Throws Error("SingularChangeOfBasis").
CentralExtension change_total_basis(const CentralExtension& ext, const Matrix& T);

/// True when s maps base brackets to total brackets.
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& map);

}  // namespace plesken
