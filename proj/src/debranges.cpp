#include "relcalc/debranges.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <numbers>
#include <random>

#include "relcalc/errors.hpp"

namespace relcalc {

Complex poly_eval(const Vector& coeffs, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index a = coeffs.size() - 1; a >= 0; --a) acc = acc * z + coeffs(a);
  return acc;
}

std::vector<Complex> poly_roots(const Vector& coeffs, double rel_tol) {
  const double scale = coeffs.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw Error("poly_roots: zero polynomial");
  Eigen::Index deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs(deg)) <= rel_tol * scale) --deg;
  if (deg == 0) return {};
  Matrix companion = Matrix::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i)
    companion(i, deg - 1) = -coeffs(i) / coeffs(deg);
  Eigen::ComplexEigenSolver<Matrix> es(companion, false);
  std::vector<Complex> roots(static_cast<size_t>(deg));
  for (Eigen::Index i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

Vector conj_poly(const Vector& coeffs) { return coeffs.conjugate(); }

Vector poly_multiply(const Vector& a, const Vector& b) {
  Vector out = Vector::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out(i + j) += a(i) * b(j);
  return out;
}

Vector HermiteBiehlerPoly::coefficients() const {
  Vector c = Vector::Constant(1, leading);
  for (const Complex& w : roots) {
    Vector lin(2);
    lin << -w, 1.0;
    c = poly_multiply(c, lin);
  }
  return c;
}

Complex HermiteBiehlerPoly::eval(Complex z) const {
  Complex acc = leading;
  for (const Complex& w : roots) acc *= (z - w);
  return acc;
}

HermiteBiehlerPoly hermite_biehler(const std::vector<Complex>& roots,
                                   Complex leading) {
  if (leading == Complex{}) throw Error("hermite_biehler: zero leading coefficient");
  for (const Complex& w : roots)
    if (w.imag() >= 0.0)
      throw RootInUpperHalfPlaneOrReal(
          "hermite_biehler: roots must lie in the open lower half-plane");
  HermiteBiehlerPoly e{roots, leading};
  // Sample the defining inequality |e| > |e#| on C_+.
  const Vector c = e.coefficients();
  const Vector cs = conj_poly(c);
  std::mt19937 rng(0xdb);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.05, 3.0);
  for (int s = 0; s < 50; ++s) {
    const Complex z(re(rng), im(rng));
    if (std::abs(poly_eval(c, z)) <= std::abs(poly_eval(cs, z)))
      throw RootInUpperHalfPlaneOrReal(
          "hermite_biehler: |e| > |e#| fails on C_+");
  }
  return e;
}

Vector DeBrangesModel::kernel_coeff(Complex w) const {
  Vector u(n());
  Complex p = 1.0;
  for (Eigen::Index b = 0; b < n(); ++b) {
    u(b) = std::conj(p);
    p *= w;
  }
  return K * u;
}

Complex DeBrangesModel::kernel_eval(Complex z, Complex w) const {
  return poly_eval(kernel_coeff(w), z);
}

Complex DeBrangesModel::inner(const Vector& f, const Vector& g) const {
  return (f.adjoint() * M * g)(0);
}

DeBrangesModel build_model(const std::vector<Complex>& roots, Complex leading,
                           ToleranceProfile tol) {
  return build_model(hermite_biehler(roots, leading), tol);
}

DeBrangesModel build_model(const HermiteBiehlerPoly& e, ToleranceProfile tol) {
  const Eigen::Index n = e.degree();
  if (n < 1) throw DimensionMismatch("build_model: degree must be >= 1");
  if (n > 12)
    throw KernelNotPositive("build_model: degree cap exceeded (conditioning)");

  const Vector c = e.coefficients();
  const Vector cs = conj_poly(c);

  // Numerator coefficients of e#(z)e(u) - e(z)e#(u), u standing for conj(w).
  Matrix P = Matrix::Zero(n + 1, n + 1);
  for (Eigen::Index a = 0; a <= n; ++a)
    for (Eigen::Index b = 0; b <= n; ++b) P(a, b) = cs(a) * c(b) - c(a) * cs(b);

  // Exact division by (z - u): synthetic division in z with polynomial
  // coefficients in u.  Q_{n-1}(u) = P_n(u); Q_{a-1}(u) = P_a(u) + u Q_a(u).
  Matrix Q = Matrix::Zero(n, n + 1);
  Q.row(n - 1) = P.row(n);
  for (Eigen::Index a = n - 1; a >= 1; --a) {
    Vector shifted = Vector::Zero(n + 1);
    shifted.tail(n) = Q.row(a).head(n).transpose();
    Q.row(a - 1) = P.row(a).transpose() + shifted;
  }
  {
    // Remainder P_0(u) + u Q_0(u) must vanish.
    Vector shifted = Vector::Zero(n + 1);
    shifted.tail(n) = Q.row(0).head(n).transpose();
    const Vector rem = P.row(0).transpose() + shifted;
    if (rem.norm() > 1e-9 * std::max(1.0, P.norm()))
      throw Error("build_model: kernel division left a remainder");
  }

  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  DeBrangesModel model;
  model.e = e;
  model.tol = tol;
  model.K = Q.leftCols(n) / two_pi_i;
  // u-degree-n terms of the quotient must cancel.
  if (Q.col(n).norm() > 1e-9 * std::max(1.0, Q.norm()))
    throw Error("build_model: kernel quotient has spurious top-degree terms");

  model.K = (model.K + model.K.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(model.K);
  const double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(n - 1);
  if (lmin <= 0.0 || lmax / lmin > 1e12)
    throw KernelNotPositive("build_model: kernel matrix not safely positive");

  model.M = es.operatorInverseSqrt() * es.operatorInverseSqrt();
  Eigen::LLT<Matrix> llt(model.M);
  if (llt.info() != Eigen::Success)
    throw KernelNotPositive("build_model: Gram factorization failed");
  model.R = Matrix(llt.matrixL()).adjoint();
  return model;
}

LinearRelation mult_relation(const DeBrangesModel& model) {
  const Eigen::Index n = model.n();
  Matrix stacked(2 * n, std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    Vector c = Vector::Zero(n), zc = Vector::Zero(n);
    c(j) = 1.0;
    zc(j + 1) = 1.0;  // z * z^j
    stacked.col(j).head(n) = model.R * c;
    stacked.col(j).tail(n) = model.R * zc;
  }
  if (n == 1) return LinearRelation(1, model.tol);
  return LinearRelation::from_stacked(n, stacked, model.tol);
}

LinearRelation s_tau(const DeBrangesModel& model, Complex tau, Complex w) {
  if (std::abs(tau) > 1.0 + model.tol.psd_abs)
    throw TauOutsideDisk("s_tau: |tau| must be <= 1");
  if (w.imag() <= 0.0)
    throw WNotInUpperHalfPlane("s_tau: w must be in C_+");
  const Eigen::Index n = model.n();
  // The extension labelled tau has spectrum = roots of phi_tau built from e.
  // Re-expressing phi_tau in the gauge of the normalized generator e_w turns
  // the span parameter into the disk automorphism sigma = phi_tau(w)/phi_tau(conj w).
  const Vector phi = phi_tau(model, tau);
  const Complex den = poly_eval(phi, std::conj(w));
  if (std::abs(den) <= 1e-13 * phi.cwiseAbs().maxCoeff())
    throw DegenerateMobius("s_tau: conj(w) is a root of phi_tau");
  const Complex sigma = poly_eval(phi, w) / den;
  const Vector kw = model.kernel_coeff(w);
  const Vector kwb = model.kernel_coeff(std::conj(w));
  const Vector c1 = sigma * kw - kwb;
  const Vector c2 = sigma * std::conj(w) * kw - w * kwb;
  Matrix stacked(2 * n, 1);
  stacked.col(0).head(n) = model.R * c1;
  stacked.col(0).tail(n) = model.R * c2;
  const LinearRelation span_part =
      LinearRelation::from_stacked(n, stacked, model.tol);
  return direct_sum(mult_relation(model), span_part);
}

Vector phi_tau(const DeBrangesModel& model, Complex tau) {
  const Vector c = model.e.coefficients();
  return tau * c - conj_poly(c);
}

std::vector<Complex> spectrum_via_phi(const DeBrangesModel& model,
                                      Complex tau) {
  if (std::abs(tau) > 1.0 + model.tol.psd_abs)
    throw TauOutsideDisk("spectrum_via_phi: |tau| must be <= 1");
  std::vector<Complex> out;
  for (const Complex& r : poly_roots(phi_tau(model, tau)))
    if (r.imag() >= -model.tol.psd_abs) out.push_back(r);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Vector eigenfunction(const DeBrangesModel& model, Complex tau, Complex lambda) {
  const Vector phi = phi_tau(model, tau);
  const double scale = phi.cwiseAbs().maxCoeff();
  if (std::abs(poly_eval(phi, lambda)) >
      1e-6 * scale * std::max(1.0, std::abs(lambda)))
    throw LambdaNotARoot("eigenfunction: phi_tau(lambda) != 0");
  // Synthetic division of phi by (z - lambda).
  const Eigen::Index n = phi.size() - 1;
  Vector quot = Vector::Zero(n);
  Complex carry = phi(n);
  for (Eigen::Index a = n - 1; a >= 0; --a) {
    quot(a) = carry;
    carry = phi(a) + lambda * carry;
  }
  return quot;
}

HermiteBiehlerPoly normalized_hb(const DeBrangesModel& model, Complex w0) {
  if (w0.imag() <= 0.0)
    throw WNotInUpperHalfPlane("normalized_hb: w0 must be in C_+");
  const Eigen::Index n = model.n();
  const Vector kw0 = model.kernel_coeff(w0);
  if (std::abs(kw0(n - 1)) <= 1e-10 * kw0.cwiseAbs().maxCoeff())
    throw DegenerateKernel("normalized_hb: k(., w0) drops degree");
  const Complex kww = model.kernel_eval(w0, w0);
  const Complex factor = std::numbers::pi / (w0.imag() * kww);
  Vector lin(2);
  lin << -std::conj(w0), 1.0;
  const Vector e_coeffs = factor * poly_multiply(lin, kw0);
  const Complex leading = e_coeffs(n);
  Vector monic = e_coeffs / leading;
  std::vector<Complex> roots = poly_roots(monic);
  for (const Complex& r : roots)
    if (r.imag() >= 0.0)
      throw RootInUpperHalfPlaneOrReal("normalized_hb: root escaped C_-");
  return hermite_biehler(roots, leading);
}

}  // namespace relcalc
