#include "plesken/extension.hpp"

#include "plesken/error.hpp"

namespace plesken {

namespace {

std::size_t first_nonzero(std::span<const Scalar> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return k;
  }
  return v.size();
}

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_section_shape(const CentralExtension& ext, const Matrix& s) {
  const std::size_t n = ext.base.dim();
  if (s.rows() != n + 1 || s.cols() != n) {
    throw Error("DimensionMismatch", "section has wrong shape", {{"rows", s.rows()}, {"cols", s.cols()}});
  }
  if (!(ext.projection * s == Matrix::identity(n))) throw Error("NotASection", "g * s is not the identity");
}

}  // namespace

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& map) {
  if (map.rows() != to.dim() || map.cols() != from.dim()) return false;
  for (std::size_t i = 0; i < from.dim(); ++i) {
    Vector mi = map.column(i);
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      if (!(map * from.bracket_basis(i, j) == to.bracket(mi, map.column(j)))) return false;
    }
  }
  return true;
}

std::vector<std::string> verify_central_extension(const CentralExtension& ext) {
  std::vector<std::string> failures;
  const std::size_t n = ext.base.dim();
  if (ext.total.dim() != n + 1) {
    failures.push_back("dimension: total must have dimension base + 1");
    return failures;
  }
  if (ext.injection.size() != n + 1 || ext.projection.rows() != n || ext.projection.cols() != n + 1) {
    failures.push_back("shape: f must have length n+1 and g must be n x (n+1)");
    return failures;
  }
  for (const auto& f : verify_lie_axioms(ext.total)) {
    failures.push_back("jacobi: total fails on " + pair_text(f.i, f.j) + "," + std::to_string(f.k));
  }
  if (!is_zero(ext.total.bracket(ext.injection, ext.injection))) failures.push_back("homomorphism: [f, f] != 0");
  for (std::size_t i = 0; i < n + 1; ++i) {
    Vector gi = ext.projection.column(i);
    for (std::size_t j = i + 1; j < n + 1; ++j) {
      if (!(ext.projection * ext.total.bracket_basis(i, j) == ext.base.bracket(gi, ext.projection.column(j)))) {
        failures.push_back("homomorphism: g fails on total pair " + pair_text(i, j));
      }
    }
  }
  if (is_zero(ext.injection)) failures.push_back("exactness: f is zero");
  if (!is_zero(ext.projection * ext.injection)) failures.push_back("exactness: g f != 0");
  if (rank(ext.projection) != n) failures.push_back("exactness: g is not surjective");
  for (std::size_t j = 0; j < n + 1; ++j) {
    if (!is_zero(ext.total.bracket(ext.injection, unit_vector(n + 1, j)))) {
      failures.push_back("centrality: [f, x_" + std::to_string(j) + "] != 0");
    }
  }
  if (ext.section) {
    const Matrix& s = *ext.section;
    if (s.rows() != n + 1 || s.cols() != n || !(ext.projection * s == Matrix::identity(n))) {
      failures.push_back("section: g s != I");
    }
  }
  return failures;
}

CentralExtension extension_from_cocycle(const LieAlgebra& base, const BilinearForm& alpha) {
  const std::size_t n = base.dim();
  if (alpha.dim() != n) throw Error("DimensionMismatch", "form and algebra dimensions differ");
  auto check = is_cocycle(base, alpha);
  if (!check.ok) {
    const auto& w = *check.witness;
    throw Error("NotACocycle", "extension bracket would violate Jacobi", {{"i", w[0]}, {"j", w[1]}, {"k", w[2]}});
  }
  std::vector<Vector> structure(pair_count(n + 1), zero_vector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector c = base.bracket_basis(i, j);
      c.push_back(alpha(i, j));
      structure[pair_index(n + 1, i, j)] = std::move(c);
    }
  }
  std::vector<std::string> labels = base.labels();
  labels.push_back("c");

  CentralExtension ext;
  ext.total = LieAlgebra::from_pair_table(n + 1, std::move(structure), std::move(labels));
  ext.base = base;
  ext.injection = unit_vector(n + 1, n);
  ext.projection = Matrix(n, n + 1);
  Matrix s(n + 1, n);
  for (std::size_t k = 0; k < n; ++k) {
    ext.projection(k, k) = 1;
    s(k, k) = 1;
  }
  ext.section = std::move(s);
  return ext;
}

Matrix find_section(const CentralExtension& ext) {
  const std::size_t n = ext.base.dim();
  Matrix s(ext.projection.cols(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve(ext.projection, unit_vector(n, j));
    if (!col) throw Error("NoSection", "projection has no right inverse", {{"column", j}});
    s.set_column(j, *col);
  }
  return s;
}

Matrix section_of(const CentralExtension& ext) { return ext.section ? *ext.section : find_section(ext); }

BilinearForm cocycle_from_extension(const CentralExtension& ext, const Matrix& s) {
  check_section_shape(ext, s);
  const std::size_t n = ext.base.dim();
  const std::size_t pivot = first_nonzero(ext.injection);
  if (pivot == ext.injection.size()) throw Error("DefectNotInKernel", "injection is zero");
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector si = s.column(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector defect = sub(ext.total.bracket(si, s.column(j)), s * ext.base.bracket_basis(i, j));
      Scalar c = defect[pivot] / ext.injection[pivot];
      if (!(defect == scale(c, ext.injection))) {
        throw Error("DefectNotInKernel", "[s(x), s(y)] - s([x,y]) is not a multiple of f", {{"i", i}, {"j", j}});
      }
      alpha(i, j) = c;
      alpha(j, i) = -c;
    }
  }
  return BilinearForm(std::move(alpha));
}

std::optional<Matrix> equivalence_map(const CentralExtension& ext1, const CentralExtension& ext2) {
  if (!ext1.base.same_structure(ext2.base)) throw Error("BaseMismatch", "extensions have different base algebras");
  const std::size_t n = ext1.base.dim();
  Matrix s1 = section_of(ext1);
  Matrix s2 = section_of(ext2);
  BilinearForm alpha = cocycle_from_extension(ext1, s1);
  BilinearForm beta = cocycle_from_extension(ext2, s2);
  // tau satisfies beta = alpha - tau o bracket, so
  // phi(c f1 + s1(y)) = c f2 + s2(y) - tau(y) f2 is a homomorphism.
  auto tau = are_cohomologous(ext1.base, alpha, beta);
  if (!tau) return std::nullopt;

  const std::size_t pivot = first_nonzero(ext1.injection);
  Matrix s1g1 = s1 * ext1.projection;
  // kernel coordinate: v - s1 g1 v = c f1, read off at a nonzero entry of f1
  Vector coefficient(n + 1);
  for (std::size_t j = 0; j < n + 1; ++j) {
    Scalar e = j == pivot ? Scalar(1) : Scalar();
    coefficient[j] = (e - s1g1(pivot, j)) / ext1.injection[pivot];
  }
  Vector shift(n + 1);  // -tau o g1
  for (std::size_t j = 0; j < n + 1; ++j) shift[j] = -dot(tau->values, ext1.projection.column(j));

  Matrix phi = s2 * ext1.projection;
  for (std::size_t r = 0; r < n + 1; ++r) {
    for (std::size_t c = 0; c < n + 1; ++c) phi(r, c) += ext2.injection[r] * (coefficient[c] + shift[c]);
  }
  return phi;
}

std::vector<std::string> verify_equivalence_map(const CentralExtension& ext1, const CentralExtension& ext2,
                                                const Matrix& phi) {
  std::vector<std::string> failures;
  const std::size_t m = ext1.total.dim();
  if (phi.rows() != ext2.total.dim() || phi.cols() != m) {
    failures.push_back("shape: phi must be (n+1) x (n+1)");
    return failures;
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector pi = phi.column(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(phi * ext1.total.bracket_basis(i, j) == ext2.total.bracket(pi, phi.column(j)))) {
        failures.push_back("homomorphism: phi fails on pair " + pair_text(i, j));
      }
    }
  }
  if (!(phi * ext1.injection == ext2.injection)) failures.push_back("injection: phi f1 != f2");
  if (!(ext2.projection * phi == ext1.projection)) failures.push_back("projection: g2 phi != g1");
  if (determinant(phi).is_zero()) failures.push_back("invertible: phi is singular");
  return failures;
}

SplitResult is_split(const CentralExtension& ext) {
  Matrix s = section_of(ext);
  BilinearForm alpha = cocycle_from_extension(ext, s);
  auto sigma = are_cohomologous(ext.base, alpha, BilinearForm::zero(ext.base.dim()));
  if (!sigma) return {};
  // s' = s + f sigma^T has defect alpha - sigma o bracket = 0.
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(r, c) += ext.injection[r] * sigma->values[c];
  }
  if (!is_homomorphism(ext.base, ext.total, s)) {
    throw Error("InternalSplitFailure", "trivializing section is not a homomorphism");
  }
  return {true, std::move(s)};
}

CentralExtension change_total_basis(const CentralExtension& ext, const Matrix& T) {
  const std::size_t m = ext.total.dim();
  if (T.rows() != m || T.cols() != m) throw Error("DimensionMismatch", "change of basis has wrong shape");
  auto Tinv = inverse(T);
  if (!Tinv) throw Error("SingularChangeOfBasis", "change of basis is not invertible");
  std::vector<Vector> structure(pair_count(m));
  for (std::size_t i = 0; i < m; ++i) {
    Vector ui = Tinv->column(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      structure[pair_index(m, i, j)] = T * ext.total.bracket(ui, Tinv->column(j));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < m; ++k) labels.push_back("y" + std::to_string(k));
  CentralExtension out;
  out.total = LieAlgebra::from_pair_table(m, std::move(structure), std::move(labels));
  out.base = ext.base;
  out.injection = T * ext.injection;
  out.projection = ext.projection * *Tinv;
  if (ext.section) out.section = T * *ext.section;
  return out;
}

}  // namespace plesken
