#include "relcalc/jacobi.hpp"

#include <Eigen/LU>

#include "relcalc/errors.hpp"
#include "relcalc/extensions.hpp"

namespace relcalc {

void JacobiModel::validate() const {
  if (N < 1) throw DimensionMismatch("JacobiModel: N must be >= 1");
  if (q.size() < N) throw DimensionMismatch("JacobiModel: need at least N diagonal entries");
  if (N > 1 && b.size() < N - 1)
    throw DimensionMismatch("JacobiModel: need at least N-1 off-diagonal entries");
  for (Eigen::Index k = 0; k + 1 < N; ++k)
    if (b(k) <= 0.0) throw Error("JacobiModel: off-diagonal entries must be positive");
}

Eigen::MatrixXd jacobi_matrix(const JacobiModel& m) {
  m.validate();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m.N, m.N);
  for (Eigen::Index k = 0; k < m.N; ++k) J(k, k) = m.q(k);
  for (Eigen::Index k = 0; k + 1 < m.N; ++k) {
    J(k, k + 1) = m.b(k);
    J(k + 1, k) = m.b(k);
  }
  return J;
}

LinearRelation jacobi_relation(const JacobiModel& m) {
  return LinearRelation::graph(jacobi_matrix(m).cast<Complex>(), m.tol);
}

LinearRelation restricted_B(const JacobiModel& m) {
  m.validate();
  if (m.N < 2) throw DimensionMismatch("restricted_B: needs N >= 2");
  const Eigen::MatrixXd J = jacobi_matrix(m);
  Matrix stacked(2 * m.N, m.N - 1);
  for (Eigen::Index k = 1; k < m.N; ++k) {
    Vector f = Vector::Zero(m.N);
    f(k) = 1.0;
    stacked.col(k - 1).head(m.N) = f;
    stacked.col(k - 1).tail(m.N) = J.col(k).cast<Complex>();
  }
  return LinearRelation::from_stacked(m.N, stacked, m.tol);
}

LinearRelation j_tau(const JacobiModel& m, Complex tau) {
  Matrix J = jacobi_matrix(m).cast<Complex>();
  J(0, 0) += tau;
  return LinearRelation::graph(J, m.tol);
}

LinearRelation j_infinity(const JacobiModel& m) {
  m.validate();
  if (m.N < 2) throw DimensionMismatch("j_infinity: needs N >= 2");
  Vector zero = Vector::Zero(m.N), delta1 = Vector::Zero(m.N);
  delta1(0) = 1.0;
  const LinearRelation Z =
      LinearRelation::from_pairs({{zero, delta1}}, m.tol);
  return direct_sum(restricted_B(m), Z);
}

namespace {

Complex recurrence(const JacobiModel& m, Complex z, Eigen::Index k,
                   Complex phi1, Complex phi2) {
  // b_{k-1} phi_{k-1} + q_k phi_k + b_k phi_{k+1} = z phi_k, b_0 = 0.
  if (k < 1 || k > m.N)
    throw DimensionMismatch("polynomial index out of range");
  if (k == 1) return phi1;
  Complex prev = phi1, cur = phi2;
  for (Eigen::Index j = 2; j < k; ++j) {
    // advance from phi_j to phi_{j+1} (1-based j)
    const Complex next =
        ((z - m.q(j - 1)) * cur - m.b(j - 2) * prev) / m.b(j - 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

Complex poly_first_kind(const JacobiModel& m, Complex z, Eigen::Index k) {
  m.validate();
  return recurrence(m, z, k, 1.0, (z - m.q(0)) / m.b(0));
}

Complex poly_second_kind(const JacobiModel& m, Complex z, Eigen::Index k) {
  m.validate();
  return recurrence(m, z, k, 0.0, 1.0 / m.b(0));
}

Vector psi_vector(const JacobiModel& m, Complex zeta) {
  const Matrix J = jacobi_matrix(m).cast<Complex>();
  const Matrix A = J - zeta * Matrix::Identity(m.N, m.N);
  Vector delta1 = Vector::Zero(m.N);
  delta1(0) = 1.0;
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0)))
    throw ZetaIsEigenvalue("psi_vector: zeta is an eigenvalue of J_N");
  return svd.solve(delta1);
}

Complex m_finite(const JacobiModel& m, Complex zeta) {
  return psi_vector(m, zeta)(0);
}

Complex beta_tau(const Tau& tau, Complex m_val, Complex m_conj_val) {
  if (tau.infinite) {
    if (std::abs(m_conj_val) == 0.0)
      throw DegenerateMobius("beta_tau: m(conj zeta) vanishes");
    return m_val / m_conj_val;
  }
  const Complex den = 1.0 + tau.value * m_conj_val;
  if (std::abs(den) < 1e-14)
    throw DegenerateMobius("beta_tau: 1 + tau m(conj zeta) vanishes");
  return (1.0 + tau.value * m_val) / den;
}

bool cross_validate_extension(const JacobiModel& m, const Tau& tau) {
  m.validate();
  if (m.N < 2) throw DimensionMismatch("cross_validate_extension: needs N >= 2");
  if (!tau.infinite && tau.value.imag() < 0.0)
    throw NotDissipative("cross_validate_extension: needs Im tau >= 0 or tau = inf");

  const Complex zeta(0.0, 1.0);
  const Vector psi_p = psi_vector(m, zeta);
  const Vector psi_m = psi_vector(m, std::conj(zeta));
  const Complex beta = beta_tau(tau, psi_p(0), psi_m(0));

  const LinearRelation B = restricted_B(m);
  ExtensionParameter P;
  P.zeta = zeta;
  P.D_basis = psi_p / psi_p.norm();
  P.range_basis = psi_m / psi_m.norm();
  const Complex theta = zeta / std::abs(zeta);
  P.K = Matrix::Constant(1, 1, std::conj(theta) * beta *
                                   (psi_m.norm() / psi_p.norm()));

  const LinearRelation built = extend_by_contraction(B, P);
  const LinearRelation direct =
      tau.infinite ? j_infinity(m) : j_tau(m, tau.value);
  return built.equals(direct);
}

}  // namespace relcalc
