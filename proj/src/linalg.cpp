#include "plesken/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace plesken {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= c;
  return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  }
  return acc;
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& c) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = c;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: ragged columns");
    m.set_column(c, cols[c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  Scalar t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

bool Matrix::is_zero() const { return plesken::is_zero(data_); }

std::optional<Scalar> Matrix::scalar_value() const {
  if (!is_square()) return std::nullopt;
  Scalar c = rows_ == 0 ? Scalar() : (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(r, k);
      if (r == k ? !(x == c) : !x.is_zero()) return std::nullopt;
    }
  }
  return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

Vector operator*(const Matrix& m, std::span<const Scalar> v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  Vector out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r) out[r] = dot(m.row(r), v);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
    }
    Scalar inv = Scalar(1) / m(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead, c).is_zero()) m(r, c) -= factor * m(lead, c);
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vector> nullspace_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Scalar determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = Scalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  RowEchelon e = rref(Matrix::from_rows(spanning, ambient_dim));
  if (e.reduced.cols() != ambient_dim) throw std::invalid_argument("Subspace: vector length mismatch");
  for (std::size_t r = 0; r < e.rank(); ++r) {
    auto row = e.reduced.row(r);
    basis_.emplace_back(row.begin(), row.end());
  }
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::full(std::size_t n) {
  std::vector<Vector> units;
  for (std::size_t k = 0; k < n; ++k) units.push_back(unit_vector(n, k));
  return Subspace(n, units);
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Scalar c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (!basis_[r][k].is_zero()) out[k] -= c * basis_[r][k];
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return plesken::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

}  // namespace plesken
