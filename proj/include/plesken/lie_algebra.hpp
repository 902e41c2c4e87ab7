#pragma once

#include "plesken/group.hpp"
#include "plesken/linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plesken {

/// Basis of the Plesken algebra: vector k is g - g^{-1} for pairs[k] =
/// (g, g^{-1}), g the smaller index. Ordered by g.
struct PleskenBasis {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Sparse element of the group algebra Q(i)[G]; never stores zeros.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;

  /// g - g^{-1}; zero when g is an involution or the identity.
  static GroupAlgebraElement hat(const FiniteGroup& group, std::size_t g);

  void add(std::size_t element, const Scalar& coefficient);
  Scalar coefficient(std::size_t element) const;
  const std::map<std::size_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::map<std::size_t, Scalar> terms_;
};

/// Convolution product over the Cayley table.
GroupAlgebraElement group_algebra_product(const FiniteGroup& group, const GroupAlgebraElement& u,
                                          const GroupAlgebraElement& v);
/// uv - vu.
GroupAlgebraElement group_algebra_commutator(const FiniteGroup& group, const GroupAlgebraElement& u,
                                             const GroupAlgebraElement& v);

struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector c;  // [x_i, x_j] = sum_k c[k] x_k
};

struct JacobiFailure {
  std::size_t i, j, k;
  Vector value;  // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
};

struct PleskenOrigin {
  std::shared_ptr<const FiniteGroup> group;
  PleskenBasis basis;
};

/// Finite-dimensional Lie algebra given by exact structure constants on a
/// fixed basis. Only the pairs i < j are stored; antisymmetry is implicit.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<PleskenOrigin>& origin() const { return origin_; }

  /// [x_i, x_j] in coordinates; handles i >= j.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension. Throws Error("DimensionMismatch") on bad lengths.
  Vector bracket(std::span<const Scalar> u, std::span<const Scalar> v) const;

  /// Coordinates of [x_i, x_j] for i < j, in flattened pair order.
  const std::vector<Vector>& structure() const { return structure_; }
  bool is_abelian() const;

  /// Same dimension and structure constants (labels ignored).
  bool same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && structure_ == other.structure_;
  }

  /// No Jacobi check; `structure` must hold pair_count(dim) vectors of
  /// length dim. Used by constructors that validate separately.
  static LieAlgebra from_pair_table(std::size_t dim, std::vector<Vector> structure,
                                    std::vector<std::string> labels = {},
                                    std::optional<PleskenOrigin> origin = std::nullopt);

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> structure_;
  std::vector<std::string> labels_;
  std::optional<PleskenOrigin> origin_;
};

/// Index of the pair (i, j), i < j, in the row-major strict upper triangle.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}
inline std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Builds an algebra from a bracket table. Entries with i > j are negated
/// into place; absent pairs are zero. Unless `force` is set, a table that
/// violates Jacobi is refused with Error("JacobiViolation").
LieAlgebra from_structure_constants(std::size_t dim, const std::vector<BracketEntry>& entries,
                                    std::vector<std::string> labels = {}, bool force = false);

struct PleskenConstruction {
  LieAlgebra algebra;
  PleskenBasis basis;
};

/// The Plesken Lie algebra L(G). Structure constants are read off the
/// group-algebra commutators of the basis elements.
PleskenConstruction plesken_algebra(const FiniteGroup& group);

PleskenBasis plesken_basis(const FiniteGroup& group);

/// Coordinates of a group-algebra element in the Plesken basis. Throws
/// Error("NotInPleskenSpan") if the element is not antisymmetric under
/// g -> g^{-1}.
Vector plesken_coordinates(const FiniteGroup& group, const PleskenBasis& basis, const GroupAlgebraElement& u);

/// Empty iff the Jacobi identity holds on every basis triple i < j < k.
std::vector<JacobiFailure> verify_lie_axioms(const LieAlgebra& algebra);

/// Matrix of ad x_i: column j holds [x_i, x_j].
Matrix adjoint_matrix(const LieAlgebra& algebra, std::size_t i);
/// Matrix of ad v.
Matrix adjoint_matrix(const LieAlgebra& algebra, std::span<const Scalar> v);

Subspace center(const LieAlgebra& algebra);
Subspace derived_subalgebra(const LieAlgebra& algebra);
Matrix killing_form(const LieAlgebra& algebra);
/// Cartan's criterion: det of the Killing form is nonzero.
bool is_semisimple(const LieAlgebra& algebra);

/// Small named algebras: "abelian" (dim n), "heis3" ([X,Y] = Z),
/// "sl2" (basis h, e, f).
LieAlgebra algebra_preset(std::string_view name, long parameter = 0);
LieAlgebra abelian_algebra(std::size_t n);
LieAlgebra heisenberg_algebra();
LieAlgebra sl2_algebra();

}  // namespace plesken
