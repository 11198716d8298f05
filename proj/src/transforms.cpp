#include "relcalc/transforms.hpp"

namespace relcalc {

LinearRelation cayley(const LinearRelation& T, Complex zeta) {
  const Matrix F = T.f_block(), G = T.g_block();
  const Eigen::Index n = T.ambient_dim();
  Matrix stacked(2 * n, T.dim());
  stacked.topRows(n) = G - std::conj(zeta) * F;
  stacked.bottomRows(n) = G - zeta * F;
  return LinearRelation::from_stacked(n, stacked, T.tol());
}

LinearRelation z_transform(const LinearRelation& T, Complex zeta) {
  const Matrix F = T.f_block(), G = T.g_block();
  const Eigen::Index n = T.ambient_dim();
  Matrix stacked(2 * n, T.dim());
  stacked.topRows(n) = G - std::conj(zeta) * F;
  stacked.bottomRows(n) = std::conj(zeta) * (G - zeta * F);
  return LinearRelation::from_stacked(n, stacked, T.tol());
}

}  // namespace relcalc
