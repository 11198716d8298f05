#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relcalc/subspace.hpp"

namespace relcalc {

/// A linear relation T in C^n (+) C^n: a subspace of C^{2n} whose elements
/// are pairs (f, g).  The first n coordinates of a basis vector form the
/// f-block, the last n the g-block.  Multivalued parts and nondense domains
/// are first-class: no operator assumption is made anywhere.
class LinearRelation {
 public:
  /// Zero relation {(0,0)} in C^n (+) C^n.
  explicit LinearRelation(Eigen::Index n, ToleranceProfile tol = {});

  /// Relation with the given subspace of C^{2n}.
  LinearRelation(Eigen::Index n, Subspace space);

  /// Graph {(f, Af)} of a square matrix.
  static LinearRelation graph(const Matrix& A, ToleranceProfile tol = {});

  /// Span of the stacked pair vectors (f_j, g_j).
  static LinearRelation from_pairs(
      const std::vector<std::pair<Vector, Vector>>& pairs,
      ToleranceProfile tol = {});

  /// Span of the columns of [F; G] stacked as a 2n x m matrix.
  static LinearRelation from_stacked(Eigen::Index n, const Matrix& stacked,
                                     ToleranceProfile tol = {});

  Eigen::Index ambient_dim() const { return n_; }
  Eigen::Index dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  const ToleranceProfile& tol() const { return space_.tol(); }

  /// f-block of the orthonormal basis (n x dim).
  Matrix f_block() const { return space_.basis().topRows(n_); }
  /// g-block of the orthonormal basis (n x dim).
  Matrix g_block() const { return space_.basis().bottomRows(n_); }

  bool contains(const LinearRelation& other) const {
    return space_.contains(other.space());
  }
  bool equals(const LinearRelation& other) const {
    return space_.equals(other.space());
  }

 private:
  Eigen::Index n_;
  Subspace space_;
};

struct RelationParts {
  Subspace dom, ran, ker, mul;
};

struct ClassificationReport {
  bool is_operator = false;
  bool is_bounded = false;
  bool is_symmetric = false;
  bool is_selfadjoint = false;
  bool is_dissipative = false;
  bool is_positive = false;
  bool is_contraction = false;
  bool is_isometry = false;
  bool is_unitary = false;
  bool is_maximal_dissipative = false;
  /// Coefficient vector achieving the most negative eigenvalue of the
  /// failed Hermitian form (dissipativity or contraction), when any.
  std::optional<Vector> witness;
};

RelationParts parts(const LinearRelation& T);

LinearRelation inverse(const LinearRelation& T);
/// U(f,g) = (g,f).
LinearRelation flip_U(const LinearRelation& T);
/// W(f,g) = (-g,f).
LinearRelation rotate_W(const LinearRelation& T);

/// T* = (W T)^perp.
LinearRelation adjoint(const LinearRelation& T);

/// T + S = {(f, g+h) : (f,g) in T, (f,h) in S}.
LinearRelation add(const LinearRelation& T, const LinearRelation& S);
/// S T = {(f,k) : exists g with (f,g) in T, (g,k) in S}.
LinearRelation compose(const LinearRelation& S, const LinearRelation& T);
/// zeta T = {(f, zeta g)}.
LinearRelation scale(Complex zeta, const LinearRelation& T);
/// T - zeta I = {(f, g - zeta f)}.
LinearRelation shift(const LinearRelation& T, Complex zeta);
/// T -+ S with T cap S = {0}; throws NonTrivialIntersection otherwise.
LinearRelation direct_sum(const LinearRelation& T, const LinearRelation& S);
/// Orthogonal complement of T in C^{2n}, viewed as a relation.
LinearRelation perp(const LinearRelation& T);

/// T_inf = T cap ({0} (+) C^n).
LinearRelation multivalued_part(const LinearRelation& T);
/// T_op = T (-) T_inf; always an operator.
LinearRelation operator_part(const LinearRelation& T);
/// T_S = T cap [(mul S)^perp (+) (mul S)^perp].
LinearRelation reduce(const LinearRelation& T, const LinearRelation& S);

ClassificationReport classify(const LinearRelation& T);

/// N_zeta(T) = {(f, zeta f) in T}.
LinearRelation deficiency_space(const LinearRelation& T, Complex zeta);
/// eta_zeta(T) = dim ran(T - zeta I)^perp.
Eigen::Index deficiency_index(const LinearRelation& T, Complex zeta);

/// Largest singular value of the operator matrix of T on dom T.
/// Throws NotAnOperator when mul T != {0}.
double operator_norm(const LinearRelation& T);

/// Matrix of the operator T on dom T (G F^+); throws NotAnOperator.
Matrix operator_matrix(const LinearRelation& T);

/// Smallest c with ||Sf|| <= c ||(f,h)|| over (f,h) in T.
double relative_bound(const LinearRelation& S, const LinearRelation& T);

}  // namespace relcalc
