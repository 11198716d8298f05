#pragma once

// Random instance generators and independent oracles shared by the test
// suites.  Everything is seeded deterministically by the caller.

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "relcalc/relation.hpp"
#include "relcalc/transforms.hpp"

namespace testgen {

using relcalc::Complex;
using relcalc::LinearRelation;
using relcalc::Matrix;
using relcalc::ToleranceProfile;
using relcalc::Vector;

using Rng = std::mt19937;

inline Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix A(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) A(i, j) = Complex(g(rng), g(rng));
  return A;
}

inline Vector random_vector(Rng& rng, Eigen::Index n) {
  return random_matrix(rng, n, 1).col(0);
}

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return Complex(g(rng), g(rng));
}

/// Haar-ish unitary via QR of a Gaussian matrix.
inline Matrix random_unitary(Rng& rng, Eigen::Index n) {
  const Matrix A = random_matrix(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(A);
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = R(j, j);
    if (std::abs(d) > 0.0) Q.col(j) *= d / std::abs(d);
  }
  return Q;
}

inline Matrix random_hermitian(Rng& rng, Eigen::Index n) {
  const Matrix A = random_matrix(rng, n, n);
  return (A + A.adjoint()) / 2.0;
}

/// Random matrix rescaled to spectral norm strictly below `norm_cap`.
inline Matrix random_contraction_matrix(Rng& rng, Eigen::Index n,
                                        double norm_cap = 0.95) {
  Matrix A = random_matrix(rng, n, n);
  const double s = relcalc::spectral_norm(A);
  std::uniform_real_distribution<double> u(0.1, norm_cap);
  if (s > 0.0) A *= u(rng) / s;
  return A;
}

/// Random relation: the span of `dim` random pair vectors in C^{2n}.
inline LinearRelation random_relation(Rng& rng, Eigen::Index n,
                                      Eigen::Index dim,
                                      ToleranceProfile tol = {}) {
  return LinearRelation::from_stacked(n, random_matrix(rng, 2 * n, dim), tol);
}

/// Isometric relation mapping k orthonormal vectors to k orthonormal
/// vectors; nondense domain and nonfull range when k < n.
inline LinearRelation random_isometric_relation(Rng& rng, Eigen::Index n,
                                                Eigen::Index k,
                                                ToleranceProfile tol = {}) {
  const Matrix U = random_unitary(rng, n), V = random_unitary(rng, n);
  Matrix stacked(2 * n, k);
  stacked.topRows(n) = U.leftCols(k);
  stacked.bottomRows(n) = V.leftCols(k);
  return LinearRelation::from_stacked(n, stacked, tol);
}

/// Contraction relation on a k-dimensional domain (always an operator).
inline LinearRelation random_contraction_relation(Rng& rng, Eigen::Index n,
                                                  Eigen::Index k,
                                                  ToleranceProfile tol = {}) {
  const Matrix U = random_unitary(rng, n);
  const Matrix C = random_contraction_matrix(rng, n);
  Matrix stacked(2 * n, k);
  stacked.topRows(n) = U.leftCols(k);
  stacked.bottomRows(n) = C * U.leftCols(k);
  return LinearRelation::from_stacked(n, stacked, tol);
}

/// Closed symmetric relation with nondense domain and possibly nontrivial
/// multivalued part: the inverse Z transform of an isometry at zeta = i.
inline LinearRelation random_symmetric_relation(Rng& rng, Eigen::Index n,
                                                Eigen::Index k,
                                                ToleranceProfile tol = {}) {
  return relcalc::z_transform(random_isometric_relation(rng, n, k, tol),
                              Complex(0.0, 1.0));
}

/// Closed dissipative relation via the inverse Z transform of a contraction.
inline LinearRelation random_dissipative_relation(Rng& rng, Eigen::Index n,
                                                  Eigen::Index k,
                                                  ToleranceProfile tol = {}) {
  return relcalc::z_transform(random_contraction_relation(rng, n, k, tol),
                              Complex(0.0, 1.0));
}

/// Independent rank oracle: Gaussian elimination with partial pivoting.
inline Eigen::Index elimination_rank(Matrix A, double tol = 1e-9) {
  if (A.size() == 0) return 0;
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < A.cols() && rank < A.rows(); ++col) {
    Eigen::Index pivot = rank;
    for (Eigen::Index i = rank + 1; i < A.rows(); ++i)
      if (std::abs(A(i, col)) > std::abs(A(pivot, col))) pivot = i;
    if (std::abs(A(pivot, col)) <= tol * scale) continue;
    A.row(rank).swap(A.row(pivot));
    for (Eigen::Index i = rank + 1; i < A.rows(); ++i) {
      const Complex factor = A(i, col) / A(rank, col);
      A.row(i) -= factor * A.row(rank);
    }
    ++rank;
  }
  return rank;
}

/// Projector spectral distance between two relations/subspaces.
inline double projector_distance(const relcalc::Subspace& A,
                                 const relcalc::Subspace& B) {
  return relcalc::spectral_norm(A.projector() - B.projector());
}

inline double projector_distance(const LinearRelation& A,
                                 const LinearRelation& B) {
  return projector_distance(A.space(), B.space());
}

}  // namespace testgen
