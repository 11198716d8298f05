#include "relcalc/extensions.hpp"

#include "relcalc/errors.hpp"
#include "relcalc/spectra.hpp"
#include "relcalc/transforms.hpp"

namespace relcalc {

namespace {

void require_symmetric(const LinearRelation& A) {
  if (!classify(A).is_symmetric)
    throw NotSymmetric("relation is not symmetric");
}

bool blocks_orthogonal(const Matrix& A, const Matrix& B, double tol) {
  if (A.cols() == 0 || B.cols() == 0) return true;
  return spectral_norm(A.adjoint() * B) <= tol;
}

}  // namespace

VonNeumannDecomposition von_neumann_decompose(const LinearRelation& A,
                                              Complex zeta) {
  if (zeta.imag() == 0.0)
    throw Error("von_neumann_decompose: zeta must be nonreal");
  require_symmetric(A);
  const LinearRelation Astar = adjoint(A);
  const LinearRelation Nm = deficiency_space(Astar, std::conj(zeta));
  const LinearRelation Np = deficiency_space(Astar, zeta);

  LinearRelation joined = A;
  if (Nm.dim() > 0) joined = direct_sum(joined, Nm);
  if (Np.dim() > 0) joined = direct_sum(joined, Np);
  if (!joined.equals(Astar))
    throw Error("von_neumann_decompose: direct sum does not reach A*");

  VonNeumannDecomposition d{A, Nm, Np, zeta, false};
  const double t = A.tol().eq_tol;
  d.is_orthogonal =
      blocks_orthogonal(A.space().basis(), Nm.space().basis(), t) &&
      blocks_orthogonal(A.space().basis(), Np.space().basis(), t) &&
      blocks_orthogonal(Nm.space().basis(), Np.space().basis(), t);
  return d;
}

LinearRelation extend_by_contraction(const LinearRelation& A,
                                     const ExtensionParameter& P) {
  if (P.zeta.imag() == 0.0)
    throw Error("extend_by_contraction: zeta must be nonreal");
  require_symmetric(A);
  const auto& tol = A.tol();

  const Eigen::Index q = P.D_basis.cols();
  if (P.K.cols() != q)
    throw DimensionMismatch("extend_by_contraction: K columns != dim D");
  if (q == 0) return A;

  const Subspace ker_plus = kernel_basis(adjoint(A), P.zeta);
  const Subspace ker_minus = kernel_basis(adjoint(A), std::conj(P.zeta));

  if (spectral_norm(P.D_basis.adjoint() * P.D_basis -
                    Matrix::Identity(q, q)) > tol.eq_tol)
    throw DomainNotInDeficiencySpace(
        "extend_by_contraction: D_basis is not orthonormal");
  for (Eigen::Index j = 0; j < q; ++j)
    if (!ker_plus.member(P.D_basis.col(j)))
      throw DomainNotInDeficiencySpace(
          "extend_by_contraction: D_basis outside ker(A* - zeta I)");

  Matrix range = P.range_basis;
  if (range.cols() == 0) range = ker_minus.basis();
  if (P.K.rows() != range.cols())
    throw DimensionMismatch("extend_by_contraction: K rows != range basis");
  for (Eigen::Index j = 0; j < range.cols(); ++j)
    if (!ker_minus.member(range.col(j)))
      throw DomainNotInDeficiencySpace(
          "extend_by_contraction: range basis outside ker(A* - conj(zeta) I)");

  if (spectral_norm(P.K) > 1.0 + tol.psd_abs)
    throw NotAContraction("extend_by_contraction: ||K|| > 1");

  const Complex theta = P.zeta / std::abs(P.zeta);
  const Matrix W = range * P.K;  // images w_j in C^n
  const Eigen::Index n = A.ambient_dim();
  Matrix stacked(2 * n, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    const Vector v = P.D_basis.col(j);
    const Vector w = W.col(j);
    stacked.col(j).head(n) = theta * w - v;
    stacked.col(j).tail(n) =
        std::conj(P.zeta) * theta * w - P.zeta * v;
  }
  const LinearRelation span_part = LinearRelation::from_stacked(n, stacked, tol);
  return direct_sum(A, span_part);
}

ExtensionParameter extension_parameter(const LinearRelation& A,
                                       const LinearRelation& A_hat,
                                       Complex zeta) {
  if (zeta.imag() <= 0.0)
    throw Error("extension_parameter: zeta must be in C_+");
  require_symmetric(A);
  if (!A_hat.contains(A))
    throw NotAnExtension("extension_parameter: A is not contained in A_hat");
  if (!classify(A_hat).is_dissipative)
    throw NotDissipative("extension_parameter: A_hat is not dissipative");

  const double s = std::abs(zeta);
  const Complex theta = zeta / s;
  const LinearRelation VA = z_transform(scale(1.0 / s, A), theta);
  const LinearRelation VH = z_transform(scale(1.0 / s, A_hat), theta);

  const Eigen::Index n = A.ambient_dim();
  ExtensionParameter P;
  P.zeta = zeta;

  const Subspace Wspace = VH.space().intersect(VA.space().complement());
  if (Wspace.dim() == 0) {
    P.K = Matrix(0, 0);
    P.D_basis = Matrix(n, 0);
    P.range_basis = Matrix(n, 0);
    return P;
  }
  const LinearRelation W(n, Wspace);
  const Matrix MW = operator_matrix(W);
  P.D_basis = parts(W).dom.basis();
  P.range_basis = kernel_basis(adjoint(A), std::conj(zeta)).basis();
  P.K = P.range_basis.adjoint() * (MW * P.D_basis);
  return P;
}

LinearRelation maximal_dissipative_extension(const LinearRelation& A,
                                             Complex zeta) {
  if (zeta.imag() <= 0.0)
    throw Error("maximal_dissipative_extension: zeta must be in C_+");
  require_symmetric(A);
  const LinearRelation N = deficiency_space(adjoint(A), zeta);
  if (N.dim() == 0) return A;
  return direct_sum(A, N);
}

LinearRelation selfadjoint_extension_at(const LinearRelation& A, double alpha) {
  require_symmetric(A);
  if (!in_quasi_regular(A, Complex(alpha, 0.0)))
    throw AlphaNotQuasiRegular("selfadjoint_extension_at: alpha in point spectrum");
  const LinearRelation Astar = adjoint(A);
  const Complex i(0.0, 1.0);
  const Eigen::Index eta_plus = deficiency_space(Astar, -i).dim();
  const Eigen::Index eta_minus = deficiency_space(Astar, i).dim();
  if (eta_plus != eta_minus)
    throw IndicesUnequal("selfadjoint_extension_at: deficiency indices differ");
  const LinearRelation N = deficiency_space(Astar, Complex(alpha, 0.0));
  if (N.dim() == 0) return A;
  return direct_sum(A, N);
}

LinearRelation contractive_join(const LinearRelation& V,
                                const LinearRelation& W) {
  const auto cv = classify(V);
  const auto cw = classify(W);
  if (!cv.is_contraction || !cw.is_contraction)
    throw NotAContraction("contractive_join: both summands must be contractions");
  const double t = V.tol().eq_tol;
  if (!blocks_orthogonal(V.space().basis(), W.space().basis(), t))
    throw NotOrthogonal("contractive_join: V and W are not orthogonal in H(+)H");

  if (cv.is_isometry) {
    const RelationParts pv = parts(V), pw = parts(W);
    if (!blocks_orthogonal(pv.dom.basis(), pw.dom.basis(), t) ||
        !blocks_orthogonal(pv.ran.basis(), pw.ran.basis(), t))
      throw NotOrthogonal(
          "contractive_join: isometric join requires dom V perp dom W and "
          "ran V perp ran W");
  }

  const LinearRelation joined(V.ambient_dim(), V.space().sum(W.space()));
  if (!classify(joined).is_contraction)
    throw JoinNotContractive("contractive_join: joined relation is not a contraction");
  return joined;
}

Eigen::Index eta_e(const LinearRelation& V) {
  if (!classify(V).is_contraction)
    throw NotAContraction("eta_e: relation is not a contraction");
  const Eigen::Index by_domain = V.ambient_dim() - parts(V).dom.dim();
  const Eigen::Index by_deficiency = deficiency_index(V, Complex(2.0, 0.0));
  if (by_domain != by_deficiency)
    throw Error("eta_e: domain codimension disagrees with deficiency index");
  return by_domain;
}

std::tuple<Eigen::Index, Eigen::Index, Eigen::Index> index_budget(
    const LinearRelation& A, const LinearRelation& A_hat) {
  if (!A_hat.contains(A))
    throw NotAnExtension("index_budget: A is not contained in A_hat");
  const Complex zeta(0.0, -1.0);
  const Eigen::Index eta_A = deficiency_index(A, zeta);
  const Eigen::Index eta_hat = deficiency_index(A_hat, zeta);
  const Eigen::Index gap = A_hat.dim() - A.dim();
  if (eta_A != eta_hat + gap)
    throw Error("index_budget: index identity violated");
  return {eta_A, eta_hat, gap};
}

}  // namespace relcalc
