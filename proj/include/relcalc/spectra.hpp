#pragma once

#include <vector>

#include "relcalc/relation.hpp"

namespace relcalc {

struct PencilEigenvalue {
  Complex value;
  Eigen::Index geometric = 0;
  Eigen::Index algebraic = 0;
};

struct SpectrumReport {
  std::vector<PencilEigenvalue> finite_eigenvalues;
  Eigen::Index infinite_multiplicity = 0;  // = dim mul T
  Eigen::Index infinite_algebraic = 0;
  bool regular_set_nonempty = false;
  bool is_square_pencil = false;
};

/// ker(T - zeta I) = {0} and the resolvent is an (automatically bounded)
/// operator.
bool in_quasi_regular(const LinearRelation& T, Complex zeta);
/// Quasi-regular with full range: (T - zeta I)^{-1} defined everywhere.
bool in_regular(const LinearRelation& T, Complex zeta);

/// Basis of ker(T - zeta I) in C^n; works for rectangular pencils.
Subspace kernel_basis(const LinearRelation& T, Complex zeta);

/// Generalized eigenvalues of the square pencil (G, F) built from an
/// orthonormal basis of T, including the eigenvalue at infinity carried
/// by mul T.  Requires dim T = n; throws NonSquareRelation otherwise and
/// SingularPencil when det(G - zeta F) vanishes identically.
SpectrumReport eigenvalues(const LinearRelation& T);

}  // namespace relcalc
