#pragma once

#include <vector>

#include "relcalc/relation.hpp"

namespace relcalc {

/// Polynomial coefficient utilities (ascending order).
Complex poly_eval(const Vector& coeffs, Complex z);
/// Roots via the companion matrix; leading coefficients below
/// rel_tol * max|coeff| are stripped first.
std::vector<Complex> poly_roots(const Vector& coeffs, double rel_tol = 1e-12);
/// f#(z) = conj(f(conj z)): conjugated coefficients.
Vector conj_poly(const Vector& coeffs);
Vector poly_multiply(const Vector& a, const Vector& b);

/// A polynomial Hermite-Biehler function e(z) = leading * prod (z - w_j)
/// with all roots in the open lower half-plane.
struct HermiteBiehlerPoly {
  std::vector<Complex> roots;
  Complex leading{1.0};

  Eigen::Index degree() const { return static_cast<Eigen::Index>(roots.size()); }
  Vector coefficients() const;
  Complex eval(Complex z) const;
};

/// Validates root placement and samples |e| > |e#| on C_+.
HermiteBiehlerPoly hermite_biehler(const std::vector<Complex>& roots,
                                   Complex leading = 1.0);

/// Finite-dimensional de Branges space of polynomials of degree < n,
/// in the monomial coefficient basis.
///  K : kernel coefficient matrix, k(z,w) = sum K_ab z^a conj(w)^b
///  M : Gram matrix of the monomial basis, M = K^{-1}
///  R : factor with M = R^H R; x = R c are orthonormal coordinates
struct DeBrangesModel {
  HermiteBiehlerPoly e;
  Matrix K;
  Matrix M;
  Matrix R;
  ToleranceProfile tol{};

  Eigen::Index n() const { return K.rows(); }
  /// Coefficients of k(., w).
  Vector kernel_coeff(Complex w) const;
  /// k(z, w).
  Complex kernel_eval(Complex z, Complex w) const;
  /// <f, g> in the space, for coefficient vectors (conjugate-linear in f).
  Complex inner(const Vector& f, const Vector& g) const;
};

DeBrangesModel build_model(const std::vector<Complex>& roots,
                           Complex leading = 1.0, ToleranceProfile tol = {});
DeBrangesModel build_model(const HermiteBiehlerPoly& e,
                           ToleranceProfile tol = {});

/// Multiplication by the independent variable, in orthonormal coordinates:
/// closed, symmetric, nondensely defined, indices (1,1).
LinearRelation mult_relation(const DeBrangesModel& model);

/// Maximal dissipative extension S_tau, |tau| <= 1, built at w in C_+;
/// selfadjoint when |tau| = 1.  Its spectrum is the root set of phi_tau
/// in the closed upper half-plane (plus infinity on degree drop), and the
/// result does not depend on the auxiliary point w.
LinearRelation s_tau(const DeBrangesModel& model, Complex tau, Complex w);

/// phi_tau(z) = tau e(z) - e#(z), in coefficients.
Vector phi_tau(const DeBrangesModel& model, Complex tau);

/// Roots of phi_tau with Im >= -psd_abs: the spectrum of S_tau.
std::vector<Complex> spectrum_via_phi(const DeBrangesModel& model, Complex tau);

/// Eigenfunction phi_tau(z)/(z - lambda) in monomial coefficients;
/// throws LambdaNotARoot unless phi_tau(lambda) = 0.
Vector eigenfunction(const DeBrangesModel& model, Complex tau, Complex lambda);

/// Normalized Hermite-Biehler function e_{w0} generating the same space:
/// e_{w0}(z) = pi (z - conj(w0)) / ((Im w0) k(w0,w0)) * k(z, w0).
HermiteBiehlerPoly normalized_hb(const DeBrangesModel& model, Complex w0);

}  // namespace relcalc
