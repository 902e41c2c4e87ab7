#pragma once

#include "plesken/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace plesken {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& c);
  /// All rows must share one length; an empty list gives a 0 x `cols` matrix.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  /// When the matrix equals c * I, returns c.
  std::optional<Scalar> scalar_value() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend Vector operator*(const Matrix& m, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                    // full RREF, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The pivot of each column is the first row at
/// or below the current one with a nonzero entry, so the output is the
/// unique RREF.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Nullspace basis: one vector per free column, free entry 1, other free
/// entries 0.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Solves m x = b; the returned solution sets every free variable to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of Q(i)^n stored as an RREF basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the stored basis (pivot entries cleared).
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(), when v lies in the span.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace plesken
