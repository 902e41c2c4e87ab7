#pragma once

// Named fixtures shared by the verification suite, the CLI and the tests.

#include "plesken/extension.hpp"
#include "plesken/group.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/projective_rep.hpp"

#include <random>
#include <string>
#include <vector>

namespace plesken::fixtures {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

struct NamedRep {
  std::string name;
  ProjectiveRep rep;
};

/// cyclic 2..8, dihedral 8, S3, Q8, (Z/3)^2, Heisenberg mod 3; only those
/// with order <= max_order.
std::vector<NamedGroup> groups(std::size_t max_order);

/// Plesken algebras of groups(max_order) plus abelian 1..4, heis3, sl2.
std::vector<NamedAlgebra> algebras(std::size_t max_order);

/// heis3 as the central extension of the abelian plane by C.
CentralExtension heisenberg_extension();

/// The dihedral algebra and the two degree-2 reps of the linear-equivalence
/// example, with the change of basis f(v1, v2) = ((v1 - i v2)/2, (v1 + i v2)/2).
struct DihedralPair {
  LieAlgebra algebra;
  ProjectiveRep first;
  ProjectiveRep second;
  Matrix f;
};
DihedralPair dihedral_pair();

/// heis3 on C^3: X -> E12, Y -> E23, Z -> E13 - I; cocycle alpha(X,Y) = 1.
ProjectiveRep heisenberg_alpha_rep();

/// Adjoint reps of algebras(max_order), the sl2 defining rep, the heis3
/// alpha-rep and the dihedral pair.
std::vector<NamedRep> reps(std::size_t max_order);

/// Small random Gaussian rationals: real part p/q with |p| <= 4, q <= 3,
/// imaginary part nonzero one time in four.
Scalar random_scalar(std::mt19937_64& rng);
Vector random_vector(std::mt19937_64& rng, std::size_t n);
/// Random combination of a subspace basis.
Vector random_element(std::mt19937_64& rng, const Subspace& space);
/// Random integer matrix with determinant +-1 (lower times upper triangular).
Matrix random_invertible(std::mt19937_64& rng, std::size_t n);

}  // namespace plesken::fixtures
