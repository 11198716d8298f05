#pragma once

#include <Eigen/Dense>

#include "relcalc/relation.hpp"

namespace relcalc {

/// Truncated Jacobi matrix data: positive off-diagonal b, real diagonal q,
/// truncation size N.
struct JacobiModel {
  Eigen::VectorXd b;  // b_1, ..., needs at least N-1 entries, all > 0
  Eigen::VectorXd q;  // q_1, ..., needs at least N entries
  Eigen::Index N = 2;
  ToleranceProfile tol{};

  void validate() const;
};

/// The extension parameter tau in C_+ u R u {inf}; infinity is a dedicated
/// state, never a large float.
struct Tau {
  bool infinite = false;
  Complex value{};

  Tau() = default;
  Tau(Complex v) : value(v) {}
  static Tau inf() {
    Tau t;
    t.infinite = true;
    return t;
  }
};

/// The N x N tridiagonal matrix section.
Eigen::MatrixXd jacobi_matrix(const JacobiModel& m);

/// Graph of the truncated Jacobi matrix.
LinearRelation jacobi_relation(const JacobiModel& m);

/// B_N = J_N restricted to {delta_1}^perp: closed, symmetric, nondensely
/// defined, with deficiency indices (1,1).
LinearRelation restricted_B(const JacobiModel& m);

/// Graph of J_N + tau delta_1 delta_1^H.
LinearRelation j_tau(const JacobiModel& m, Complex tau);

/// J(inf) = B_N -+ span{(0, delta_1)}: the multivalued selfadjoint extension.
LinearRelation j_infinity(const JacobiModel& m);

/// Orthogonal polynomials of the first kind: pi_1 = 1, three-term recurrence.
Complex poly_first_kind(const JacobiModel& m, Complex z, Eigen::Index k);
/// Second kind: theta_1 = 0, theta_2 = 1/b_1.
Complex poly_second_kind(const JacobiModel& m, Complex z, Eigen::Index k);

/// psi_N(zeta) = (J_N - zeta)^{-1} delta_1, the finite-section Weyl solution.
Vector psi_vector(const JacobiModel& m, Complex zeta);
/// First entry of psi_N(zeta); Herglotz in zeta.
Complex m_finite(const JacobiModel& m, Complex zeta);

/// Moebius correspondence beta_tau = (1 + tau m(zeta)) / (1 + tau m(conj zeta));
/// beta_inf = m(zeta)/m(conj zeta).
Complex beta_tau(const Tau& tau, Complex m_val, Complex m_conj_val);

/// Builds the extension of B_N from the beta_tau-derived contraction
/// parameter and compares it with j_tau / j_infinity under subspace equality.
bool cross_validate_extension(const JacobiModel& m, const Tau& tau);

}  // namespace relcalc
