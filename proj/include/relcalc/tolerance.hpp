#pragma once

namespace relcalc {

/// Numerical policy shared by all subspace/relation computations.
/// rank_rel : relative singular-value cutoff for rank decisions
/// psd_abs  : absolute floor for negative eigenvalues in PSD tests
/// eq_tol   : projector-distance threshold for subspace equality
struct ToleranceProfile {
  double rank_rel = 1e-10;
  double psd_abs = 1e-10;
  double eq_tol = 1e-8;
};

}  // namespace relcalc
