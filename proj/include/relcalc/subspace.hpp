#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "relcalc/tolerance.hpp"

namespace relcalc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A linear subspace of C^d, stored as a d x r matrix with orthonormal
/// columns.  Values are immutable; every operation returns a new Subspace.
class Subspace {
 public:
  /// Zero subspace of C^d.
  explicit Subspace(Eigen::Index ambient_dim, ToleranceProfile tol = {});

  /// Column span of `vectors`, orthonormalized via SVD with the
  /// rank cutoff rank_rel * sigma_max.
  static Subspace span(const std::vector<Vector>& vectors,
                       ToleranceProfile tol = {});
  static Subspace span(const Matrix& columns, ToleranceProfile tol = {});

  static Subspace full(Eigen::Index ambient_dim, ToleranceProfile tol = {});

  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const ToleranceProfile& tol() const { return tol_; }

  Subspace complement() const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool member(const Vector& v) const;
  bool equals(const Subspace& other) const;
  bool contains(const Subspace& other) const;
  Matrix projector() const;

  /// Component of v orthogonal to this subspace.
  Vector residual(const Vector& v) const;

 private:
  Subspace(Matrix basis, ToleranceProfile tol);

  Matrix basis_;
  ToleranceProfile tol_;
};

/// Orthonormal basis of the nullspace of A (columns of the returned
/// matrix), using the same rank policy as Subspace::span.
Matrix nullspace(const Matrix& A, const ToleranceProfile& tol = {});

/// Numerical rank of A under the tolerance profile.
Eigen::Index numerical_rank(const Matrix& A, const ToleranceProfile& tol = {});

/// Largest singular value (spectral norm).
double spectral_norm(const Matrix& A);

}  // namespace relcalc
