#include "plesken/projective_rep.hpp"

#include "plesken/error.hpp"

namespace plesken {

Matrix ProjectiveRep::image(std::span<const Scalar> v) const {
  if (v.size() != matrices.size()) throw Error("DimensionMismatch", "vector length differs from algebra dimension");
  Matrix out(degree(), degree());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out += v[k] * matrices[k];
  }
  return out;
}

void check_rep_shape(const LieAlgebra& L, const std::vector<Matrix>& matrices) {
  if (matrices.size() != L.dim()) {
    throw Error("DimensionMismatch", "need one matrix per basis vector",
                {{"dim", L.dim()}, {"matrices", matrices.size()}});
  }
  if (matrices.empty()) return;
  const std::size_t d = matrices.front().rows();
  if (d == 0) throw Error("BadDegree", "representation degree must be >= 1");
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (matrices[k].rows() != d || matrices[k].cols() != d) {
      throw Error("DimensionMismatch", "matrices must all be d x d", {{"index", k}});
    }
  }
}

namespace {

Matrix image_of(const std::vector<Matrix>& matrices, std::size_t d, std::span<const Scalar> v) {
  Matrix out(d, d);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out += v[k] * matrices[k];
  }
  return out;
}

Matrix defect(const LieAlgebra& L, const std::vector<Matrix>& matrices, std::size_t i, std::size_t j) {
  const std::size_t d = matrices.front().rows();
  return commutator(matrices[i], matrices[j]) - image_of(matrices, d, L.bracket_basis(i, j));
}

}  // namespace

BilinearForm cocycle_from_rep(const LieAlgebra& L, const std::vector<Matrix>& matrices) {
  check_rep_shape(L, matrices);
  const std::size_t n = L.dim();
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix D = defect(L, matrices, i, j);
      auto c = D.scalar_value();
      if (!c) {
        // locate an offending entry: off-diagonal nonzero or a diagonal that
        // differs from D(0,0)
        std::size_t row = 0, col = 0;
        for (std::size_t r = 0; r < D.rows(); ++r) {
          for (std::size_t k = 0; k < D.cols(); ++k) {
            bool bad = r == k ? !(D(r, k) == D(0, 0)) : !D(r, k).is_zero();
            if (bad) {
              row = r;
              col = k;
              r = D.rows();
              break;
            }
          }
        }
        throw Error("DefectNotScalar", "[Phi(x_i), Phi(x_j)] - Phi([x_i,x_j]) is not a scalar matrix",
                    {{"i", i}, {"j", j}, {"row", row}, {"col", col}, {"value", D(row, col).str()}});
      }
      alpha(i, j) = *c;
      alpha(j, i) = -*c;
    }
  }
  BilinearForm form(std::move(alpha));
  if (!is_cocycle(L, form).ok) throw Error("NotACocycle", "extracted defect form is not a cocycle");
  return form;
}

BilinearForm cocycle_from_rep(const ProjectiveRep& rep) { return cocycle_from_rep(rep.algebra, rep.matrices); }

std::vector<AlphaRepFailure> validate_alpha_rep(const LieAlgebra& L, const std::vector<Matrix>& matrices,
                                                const BilinearForm& alpha) {
  check_rep_shape(L, matrices);
  if (alpha.dim() != L.dim()) throw Error("DimensionMismatch", "form and algebra dimensions differ");
  std::vector<AlphaRepFailure> failures;
  const std::size_t n = L.dim();
  const std::size_t d = n == 0 ? 0 : matrices.front().rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix residual = defect(L, matrices, i, j) - Matrix::scalar(d, alpha(i, j));
      if (!residual.is_zero()) failures.push_back({i, j, std::move(residual)});
    }
  }
  return failures;
}

ProjectiveRep lift_linear(const LieAlgebra& L, std::vector<Matrix> matrices) {
  check_rep_shape(L, matrices);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      if (!defect(L, matrices, i, j).is_zero()) {
        throw Error("NotAHomomorphism", "rho([x_i,x_j]) != [rho(x_i), rho(x_j)]", {{"i", i}, {"j", j}});
      }
    }
  }
  return {L, std::move(matrices), BilinearForm::zero(L.dim())};
}

ProjectiveRep adjoint_rep(const LieAlgebra& L) {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(adjoint_matrix(L, i));
  return lift_linear(L, std::move(ads));
}

ProjectiveRep twist(const ProjectiveRep& rep, const LinearFunctional& sigma) {
  if (sigma.dim() != rep.matrices.size()) throw Error("DimensionMismatch", "functional length differs from dim");
  ProjectiveRep out{rep.algebra, rep.matrices, std::nullopt};
  const std::size_t d = rep.degree();
  for (std::size_t k = 0; k < out.matrices.size(); ++k) {
    if (!sigma.values[k].is_zero()) out.matrices[k] -= Matrix::scalar(d, sigma.values[k]);
  }
  if (rep.cocycle) out.cocycle = *rep.cocycle - coboundary(rep.algebra, sigma);
  return out;
}

ProjectiveEquivalenceReport verify_projective_equivalence(const ProjectiveRep& rep1, const ProjectiveRep& rep2,
                                                          const Matrix& f, const LinearFunctional& delta) {
  if (rep1.matrices.size() != rep2.matrices.size() || delta.dim() != rep1.matrices.size()) {
    throw Error("DimensionMismatch", "representations and functional must share the algebra dimension");
  }
  const std::size_t d = rep1.degree();
  if (rep2.degree() != d) throw Error("DegreeMismatch", "representations have different degrees");
  if (f.rows() != d || f.cols() != d) throw Error("DimensionMismatch", "f must be d x d");
  auto f_inv = inverse(f);
  if (!f_inv) throw Error("SingularF", "f is not invertible");

  ProjectiveEquivalenceReport report;
  report.linear = is_zero(delta.values);
  for (std::size_t k = 0; k < rep1.matrices.size(); ++k) {
    Matrix residual = rep2.matrices[k] - f * rep1.matrices[k] * *f_inv - Matrix::scalar(d, delta.values[k]);
    if (!residual.is_zero()) report.failures.emplace_back(k, std::move(residual));
  }
  return report;
}

LinearFunctional cohomologous_witness_from_equivalence(const ProjectiveRep& rep1, const ProjectiveRep& rep2,
                                                       const Matrix& f, const LinearFunctional& delta) {
  if (!verify_projective_equivalence(rep1, rep2, f, delta).ok()) {
    throw Error("NotEquivalent", "the given (f, delta) is not a projective equivalence");
  }
  BilinearForm alpha1 = cocycle_from_rep(rep1);
  BilinearForm alpha2 = cocycle_from_rep(rep2);
  auto sigma = are_cohomologous(rep1.algebra, alpha1, alpha2);
  if (!sigma || !(alpha2 - alpha1 == coboundary(rep1.algebra, delta))) {
    throw Error("InternalWitnessMismatch", "equivalence does not produce a cohomology witness");
  }
  return delta;
}

}  // namespace plesken
