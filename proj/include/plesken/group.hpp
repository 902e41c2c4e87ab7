#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plesken {

/// Finite group given by its Cayley table. Elements are indices; labels are
/// cosmetic. Immutable once constructed.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const Table& table() const { return table_; }
  const std::vector<std::size_t>& inverses() const { return inverse_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }

  bool is_abelian() const;

  friend FiniteGroup from_cayley_table(Table table, std::vector<std::string> labels);

 private:
  FiniteGroup() = default;

  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

/// Validates the group axioms and computes identity and inverses.
/// Errors (plesken::Error codes): MalformedTable, NotClosed, NoIdentity,
/// MissingInverse, NotAssociative.
FiniteGroup from_cayley_table(FiniteGroup::Table table, std::vector<std::string> labels = {});

inline constexpr std::size_t kDefaultOrderLimit = 10000;

using Permutation = std::vector<std::size_t>;

/// Closure under composition, (p*q)(x) = p(q(x)). Breadth-first from the
/// identity, right-multiplying by the generators in the given order.
FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators,
                                        std::size_t order_limit = kDefaultOrderLimit);

using IntMatrix = std::vector<std::vector<long>>;

/// Multiplicative closure of k x k integer matrices reduced mod p.
FiniteGroup from_matrix_generators_mod_p(const std::vector<IntMatrix>& generators, long p,
                                         std::size_t order_limit = kDefaultOrderLimit);

/// Named groups: cyclic n, dihedral n (order 2n), symmetric n,
/// quaternion8, heisenberg_p p (order p^3), elementary_abelian_p2 p
/// (order p^2, the matrix group of the central-extension example).
FiniteGroup preset(std::string_view name, long parameter);

/// Number of g with g^2 = e, identity included.
std::size_t self_inverse_count(const FiniteGroup& group);

std::string cycle_notation(const Permutation& perm);

}  // namespace plesken
