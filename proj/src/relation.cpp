#include "relcalc/relation.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "relcalc/errors.hpp"

namespace relcalc {

namespace {

Subspace zero_subspace(Eigen::Index d, const ToleranceProfile& tol) {
  return Subspace(d, tol);
}

Matrix pseudo_inverse(const Matrix& A, const ToleranceProfile& tol) {
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff =
      std::max(tol.rank_rel * (sv.size() ? sv(0) : 0.0), 1e-13);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

LinearRelation::LinearRelation(Eigen::Index n, ToleranceProfile tol)
    : n_(n), space_(2 * n, tol) {
  if (n < 1) throw DimensionMismatch("relation ambient dimension must be >= 1");
}

LinearRelation::LinearRelation(Eigen::Index n, Subspace space)
    : n_(n), space_(std::move(space)) {
  if (space_.ambient_dim() != 2 * n)
    throw DimensionMismatch("relation subspace must live in C^{2n}");
}

LinearRelation LinearRelation::graph(const Matrix& A, ToleranceProfile tol) {
  if (A.rows() != A.cols())
    throw DimensionMismatch("graph: matrix must be square");
  const Eigen::Index n = A.rows();
  Matrix stacked(2 * n, n);
  stacked << Matrix::Identity(n, n), A;
  return from_stacked(n, stacked, tol);
}

LinearRelation LinearRelation::from_pairs(
    const std::vector<std::pair<Vector, Vector>>& pairs, ToleranceProfile tol) {
  if (pairs.empty()) throw DimensionMismatch("from_pairs: empty pair list");
  const Eigen::Index n = pairs.front().first.size();
  Matrix stacked(2 * n, static_cast<Eigen::Index>(pairs.size()));
  for (Eigen::Index j = 0; j < stacked.cols(); ++j) {
    const auto& [f, g] = pairs[static_cast<size_t>(j)];
    if (f.size() != n || g.size() != n)
      throw DimensionMismatch("from_pairs: component length mismatch");
    stacked.col(j).head(n) = f;
    stacked.col(j).tail(n) = g;
  }
  return from_stacked(n, stacked, tol);
}

LinearRelation LinearRelation::from_stacked(Eigen::Index n, const Matrix& stacked,
                                            ToleranceProfile tol) {
  if (stacked.rows() != 2 * n)
    throw DimensionMismatch("from_stacked: expected 2n rows");
  return LinearRelation(n, Subspace::span(stacked, tol));
}

RelationParts parts(const LinearRelation& T) {
  const Eigen::Index n = T.ambient_dim();
  const auto& tol = T.tol();
  const Matrix F = T.f_block(), G = T.g_block();
  RelationParts p{zero_subspace(n, tol), zero_subspace(n, tol),
                  zero_subspace(n, tol), zero_subspace(n, tol)};
  if (T.dim() > 0) {
    p.dom = Subspace::span(F, tol);
    p.ran = Subspace::span(G, tol);
    // ker: f-components of coefficient vectors with vanishing g-block.
    const Matrix cker = nullspace(G, tol);
    if (cker.cols() > 0) p.ker = Subspace::span(F * cker, tol);
    const Matrix cmul = nullspace(F, tol);
    if (cmul.cols() > 0) p.mul = Subspace::span(G * cmul, tol);
  }
  return p;
}

namespace {

LinearRelation remap(const LinearRelation& T, const Matrix& newF,
                     const Matrix& newG) {
  const Eigen::Index n = T.ambient_dim();
  Matrix stacked(2 * n, newF.cols());
  stacked.topRows(n) = newF;
  stacked.bottomRows(n) = newG;
  return LinearRelation::from_stacked(n, stacked, T.tol());
}

}  // namespace

LinearRelation inverse(const LinearRelation& T) {
  return remap(T, T.g_block(), T.f_block());
}

LinearRelation flip_U(const LinearRelation& T) { return inverse(T); }

LinearRelation rotate_W(const LinearRelation& T) {
  return remap(T, -T.g_block(), T.f_block());
}

LinearRelation adjoint(const LinearRelation& T) {
  return LinearRelation(T.ambient_dim(), rotate_W(T).space().complement());
}

LinearRelation add(const LinearRelation& T, const LinearRelation& S) {
  const Eigen::Index n = T.ambient_dim();
  if (S.ambient_dim() != n) throw DimensionMismatch("add: dimension mismatch");
  // Coefficient pairs (c,d) with equal first components F_T c = F_S d.
  Matrix coupled(n, T.dim() + S.dim());
  coupled << T.f_block(), -S.f_block();
  const Matrix N = nullspace(coupled, T.tol());
  if (N.cols() == 0) return LinearRelation(n, T.tol());
  const Matrix c = N.topRows(T.dim());
  const Matrix d = N.bottomRows(S.dim());
  return remap(T, T.f_block() * c, T.g_block() * c + S.g_block() * d);
}

LinearRelation compose(const LinearRelation& S, const LinearRelation& T) {
  const Eigen::Index n = T.ambient_dim();
  if (S.ambient_dim() != n)
    throw DimensionMismatch("compose: dimension mismatch");
  // Pairs (c,d) with G_T c = F_S d, element (F_T c, G_S d).
  Matrix coupled(n, T.dim() + S.dim());
  coupled << T.g_block(), -S.f_block();
  const Matrix N = nullspace(coupled, T.tol());
  if (N.cols() == 0) return LinearRelation(n, T.tol());
  const Matrix c = N.topRows(T.dim());
  const Matrix d = N.bottomRows(S.dim());
  return remap(T, T.f_block() * c, S.g_block() * d);
}

LinearRelation scale(Complex zeta, const LinearRelation& T) {
  return remap(T, T.f_block(), zeta * T.g_block());
}

LinearRelation shift(const LinearRelation& T, Complex zeta) {
  return remap(T, T.f_block(), T.g_block() - zeta * T.f_block());
}

LinearRelation direct_sum(const LinearRelation& T, const LinearRelation& S) {
  if (S.ambient_dim() != T.ambient_dim())
    throw DimensionMismatch("direct_sum: dimension mismatch");
  if (T.space().intersect(S.space()).dim() != 0)
    throw NonTrivialIntersection("direct_sum: summands intersect nontrivially");
  return LinearRelation(T.ambient_dim(), T.space().sum(S.space()));
}

LinearRelation perp(const LinearRelation& T) {
  return LinearRelation(T.ambient_dim(), T.space().complement());
}

LinearRelation multivalued_part(const LinearRelation& T) {
  const Matrix cmul = nullspace(T.f_block(), T.tol());
  if (cmul.cols() == 0) return LinearRelation(T.ambient_dim(), T.tol());
  return remap(T, T.f_block() * cmul, T.g_block() * cmul);
}

LinearRelation operator_part(const LinearRelation& T) {
  const LinearRelation tinf = multivalued_part(T);
  if (tinf.dim() == 0) return T;
  return LinearRelation(
      T.ambient_dim(), T.space().intersect(tinf.space().complement()));
}

LinearRelation reduce(const LinearRelation& T, const LinearRelation& S) {
  const Eigen::Index n = T.ambient_dim();
  const Subspace mulS = parts(S).mul;
  if (mulS.dim() == 0) return T;
  const Subspace q = mulS.complement();
  Matrix prod = Matrix::Zero(2 * n, 2 * q.dim());
  prod.block(0, 0, n, q.dim()) = q.basis();
  prod.block(n, q.dim(), n, q.dim()) = q.basis();
  return LinearRelation(n, T.space().intersect(Subspace::span(prod, T.tol())));
}

LinearRelation deficiency_space(const LinearRelation& T, Complex zeta) {
  // {(f, zeta f) in T}: coefficient nullspace of G - zeta F.
  const Matrix pencil = T.g_block() - zeta * T.f_block();
  const Matrix N = nullspace(pencil, T.tol());
  if (N.cols() == 0) return LinearRelation(T.ambient_dim(), T.tol());
  return remap(T, T.f_block() * N, T.g_block() * N);
}

Eigen::Index deficiency_index(const LinearRelation& T, Complex zeta) {
  return T.ambient_dim() - parts(shift(T, zeta)).ran.dim();
}

Matrix operator_matrix(const LinearRelation& T) {
  const Matrix F = T.f_block(), G = T.g_block();
  if (nullspace(F, T.tol()).cols() > 0)
    throw NotAnOperator("relation has a nontrivial multivalued part");
  return G * pseudo_inverse(F, T.tol());
}

double operator_norm(const LinearRelation& T) {
  return spectral_norm(operator_matrix(T));
}

double relative_bound(const LinearRelation& S, const LinearRelation& T) {
  RelationParts pS = parts(S), pT = parts(T);
  if (!pS.dom.contains(pT.dom))
    throw DomainNotContained("relative_bound: dom T not contained in dom S");
  const Matrix MS = operator_matrix(S);
  // (f,h) = basis * c with ||(f,h)|| = ||c||; maximize ||S f||/||c||.
  return spectral_norm(MS * T.f_block());
}

ClassificationReport classify(const LinearRelation& T) {
  ClassificationReport rep;
  const auto& tol = T.tol();
  const Matrix F = T.f_block(), G = T.g_block();
  const RelationParts p = parts(T);

  rep.is_operator = (p.mul.dim() == 0);
  rep.is_bounded = rep.is_operator;  // finite dimension

  const Complex I(0.0, 1.0);
  const Matrix FhG = F.adjoint() * G;
  const Matrix Mim = (FhG - FhG.adjoint()) / (2.0 * I);

  auto psd_floor = [&](const Matrix& M) {
    return -tol.psd_abs * std::max(1.0, spectral_norm(M));
  };

  double min_eig_im = 0.0;
  Vector im_witness;
  if (T.dim() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(Mim);
    min_eig_im = es.eigenvalues()(0);
    im_witness = es.eigenvectors().col(0);
  }
  rep.is_dissipative = (T.dim() == 0) || (min_eig_im >= psd_floor(Mim));
  rep.is_symmetric = (T.dim() == 0) || (spectral_norm(Mim) <= tol.psd_abs);
  if (!rep.is_dissipative) rep.witness = im_witness;

  if (rep.is_symmetric && T.dim() > 0) {
    const Matrix H = (FhG + FhG.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    rep.is_positive = es.eigenvalues()(0) >= psd_floor(H);
  } else {
    rep.is_positive = (T.dim() == 0);
  }

  const Matrix Ct = F.adjoint() * F - G.adjoint() * G;
  if (T.dim() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(Ct);
    const double min_eig_ct = es.eigenvalues()(0);
    rep.is_contraction = min_eig_ct >= psd_floor(Ct);
    if (!rep.is_contraction && !rep.witness) rep.witness = es.eigenvectors().col(0);
    rep.is_isometry = spectral_norm(Ct) <= tol.psd_abs;
  } else {
    rep.is_contraction = true;
    rep.is_isometry = true;
  }
  const Eigen::Index n = T.ambient_dim();
  rep.is_unitary = rep.is_isometry && p.dom.dim() == n && p.ran.dim() == n;

  rep.is_selfadjoint = rep.is_symmetric && T.equals(adjoint(T));
  rep.is_maximal_dissipative =
      rep.is_dissipative && deficiency_index(T, Complex(0.0, -1.0)) == 0;
  return rep;
}

}  // namespace relcalc
