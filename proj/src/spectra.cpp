#include "relcalc/spectra.hpp"

#include <algorithm>
#include <random>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "relcalc/errors.hpp"

namespace relcalc {

bool in_quasi_regular(const LinearRelation& T, Complex zeta) {
  return kernel_basis(T, zeta).dim() == 0;
}

bool in_regular(const LinearRelation& T, Complex zeta) {
  if (!in_quasi_regular(T, zeta)) return false;
  return parts(shift(T, zeta)).ran.dim() == T.ambient_dim();
}

Subspace kernel_basis(const LinearRelation& T, Complex zeta) {
  const Matrix pencil = T.g_block() - zeta * T.f_block();
  const Matrix N = nullspace(pencil, T.tol());
  if (N.cols() == 0) return Subspace(T.ambient_dim(), T.tol());
  return Subspace::span(T.f_block() * N, T.tol());
}

SpectrumReport eigenvalues(const LinearRelation& T) {
  const Eigen::Index n = T.ambient_dim();
  if (T.dim() != n)
    throw NonSquareRelation("eigenvalues: dim T != ambient dimension");

  Matrix G = T.g_block(), F = T.f_block();

  // Regularity probe: det(G - sigma F) not identically zero.
  {
    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    bool regular = false;
    for (int trial = 0; trial < 5 && !regular; ++trial) {
      const Complex sigma(u(rng), u(rng));
      regular = numerical_rank(G - sigma * F, T.tol()) == n;
    }
    if (!regular)
      throw SingularPencil("eigenvalues: det(G - zeta F) vanishes identically");
  }

  SpectrumReport rep;
  rep.is_square_pencil = true;
  rep.regular_set_nonempty = true;
  rep.infinite_multiplicity = parts(T).mul.dim();

  Matrix A = G, B = F;
  Vector alpha(n), beta(n);
  const lapack_int info = LAPACKE_zggev(
      LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n), A.data(),
      static_cast<lapack_int>(n), B.data(), static_cast<lapack_int>(n),
      alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw Error("eigenvalues: zggev failed");

  const double scale = std::max(spectral_norm(G), spectral_norm(F));
  std::vector<Complex> finite;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(beta(i)) <=
        1e-10 * (std::abs(alpha(i)) + std::abs(beta(i)) + scale * 1e-16)) {
      ++rep.infinite_algebraic;
    } else {
      finite.push_back(alpha(i) / beta(i));
    }
  }

  std::sort(finite.begin(), finite.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  // Merge clusters within 10 * eq_tol, sum algebraic multiplicities.
  const double merge_tol = 10.0 * T.tol().eq_tol;
  for (size_t i = 0; i < finite.size();) {
    Complex center = finite[i];
    size_t j = i + 1;
    while (j < finite.size() &&
           std::abs(finite[j] - center) <=
               merge_tol * std::max(1.0, std::abs(center)))
      ++j;
    Complex mean{};
    for (size_t k = i; k < j; ++k) mean += finite[k];
    mean /= static_cast<double>(j - i);
    PencilEigenvalue ev;
    ev.value = mean;
    ev.algebraic = static_cast<Eigen::Index>(j - i);
    // Defective eigenvalues are located to ~eps^(1/m) only; the rank-drop
    // test needs a matching relaxed cutoff.
    ToleranceProfile rank_tol = T.tol();
    rank_tol.rank_rel = std::max(rank_tol.rank_rel, 1e-6);
    ev.geometric = n - numerical_rank(G - mean * F, rank_tol);
    rep.finite_eigenvalues.push_back(ev);
    i = j;
  }
  return rep;
}

}  // namespace relcalc
