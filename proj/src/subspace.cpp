#include "relcalc/subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include "relcalc/errors.hpp"

namespace relcalc {

namespace {

// Absolute floor so that the all-zero matrix gets rank 0 instead of
// dividing by a vanishing sigma_max.
constexpr double kAbsFloor = 1e-13;

Matrix orthonormalize(const Matrix& A, const ToleranceProfile& tol) {
  if (A.cols() == 0) return Matrix(A.rows(), 0);
  // Already-orthonormal columns are kept verbatim: the SVD of such a matrix
  // has fully degenerate singular values, so re-running it would pick an
  // arbitrary rotation of the same basis and emitted documents would not be
  // stable under re-parsing.
  if (A.cols() <= A.rows() &&
      (A.adjoint() * A - Matrix::Identity(A.cols(), A.cols())).norm() <=
          1e-12 * std::sqrt(static_cast<double>(A.cols())))
    return A;
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = std::max(tol.rank_rel * (sv.size() ? sv(0) : 0.0), kAbsFloor);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace

Subspace::Subspace(Eigen::Index ambient_dim, ToleranceProfile tol)
    : basis_(Matrix(ambient_dim, 0)), tol_(tol) {
  if (ambient_dim < 1) throw DimensionMismatch("ambient dimension must be >= 1");
}

Subspace::Subspace(Matrix basis, ToleranceProfile tol)
    : basis_(std::move(basis)), tol_(tol) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, ToleranceProfile tol) {
  if (vectors.empty()) throw DimensionMismatch("span of an empty vector list");
  const Eigen::Index d = vectors.front().size();
  Matrix A(d, static_cast<Eigen::Index>(vectors.size()));
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    if (vectors[j].size() != d)
      throw DimensionMismatch("span: vectors of unequal length");
    A.col(j) = vectors[j];
  }
  return span(A, tol);
}

Subspace Subspace::span(const Matrix& columns, ToleranceProfile tol) {
  if (columns.rows() < 1) throw DimensionMismatch("span: ambient dimension 0");
  return Subspace(orthonormalize(columns, tol), tol);
}

Subspace Subspace::full(Eigen::Index ambient_dim, ToleranceProfile tol) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim), tol);
}

Subspace Subspace::complement() const {
  const Eigen::Index d = ambient_dim(), r = dim();
  if (r == 0) return full(d, tol_);
  // Complete the orthonormal basis to a full one; the trailing columns
  // span the orthogonal complement.
  Eigen::HouseholderQR<Matrix> qr(basis_);
  Matrix Q = qr.householderQ();
  return Subspace(Q.rightCols(d - r), tol_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim())
    throw DimensionMismatch("sum: ambient dimension mismatch");
  Matrix A(ambient_dim(), dim() + other.dim());
  A << basis_, other.basis_;
  return span(A, tol_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim())
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  return complement().sum(other.complement()).complement();
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw DimensionMismatch("member: vector length mismatch");
  return v - basis_ * (basis_.adjoint() * v);
}

bool Subspace::member(const Vector& v) const {
  const double nv = v.norm();
  if (nv == 0.0) return true;
  return residual(v).norm() <= tol_.eq_tol * nv;
}

bool Subspace::equals(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  if (other.dim() != dim()) return false;
  return spectral_norm(projector() - other.projector()) <= tol_.eq_tol;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (Eigen::Index j = 0; j < other.dim(); ++j)
    if (!member(other.basis().col(j))) return false;
  return true;
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Matrix nullspace(const Matrix& A, const ToleranceProfile& tol) {
  if (A.cols() == 0) return Matrix(0, 0);
  if (A.rows() == 0) return Matrix::Identity(A.cols(), A.cols());
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = std::max(tol.rank_rel * (sv.size() ? sv(0) : 0.0), kAbsFloor);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixV().rightCols(A.cols() - r);
}

Eigen::Index numerical_rank(const Matrix& A, const ToleranceProfile& tol) {
  if (A.cols() == 0 || A.rows() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(A);
  const auto& sv = svd.singularValues();
  const double cutoff = std::max(tol.rank_rel * (sv.size() ? sv(0) : 0.0), kAbsFloor);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

double spectral_norm(const Matrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

}  // namespace relcalc
