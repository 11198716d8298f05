#pragma once

#include <tuple>

#include "relcalc/relation.hpp"

namespace relcalc {

/// Parameter of a dissipative extension of a closed symmetric relation A:
/// a contraction between deficiency kernels.
///
/// D_basis: orthonormal columns spanning the chosen domain subspace of
/// ker(A* - zeta I).  K maps D_basis coordinates to range_basis
/// coordinates; range_basis has orthonormal columns in ker(A* - conj(zeta) I).
/// An empty range_basis means "use the canonical kernel basis of A".
struct ExtensionParameter {
  Complex zeta{0.0, 1.0};
  Matrix K;
  Matrix D_basis;
  Matrix range_basis;
};

struct VonNeumannDecomposition {
  LinearRelation A;
  LinearRelation N_minus;  // N_{conj(zeta)}(A*)
  LinearRelation N_plus;   // N_zeta(A*)
  Complex zeta;
  bool is_orthogonal = false;
};

/// First von Neumann formula: A* = A -+ N_{conj(zeta)}(A*) -+ N_zeta(A*),
/// orthogonal at zeta = +-i.  Throws NotSymmetric.
VonNeumannDecomposition von_neumann_decompose(const LinearRelation& A,
                                              Complex zeta);

/// Second (generalized) von Neumann formula: the closed dissipative
/// extension A -+ (V - I)D determined by the contraction parameter.
LinearRelation extend_by_contraction(const LinearRelation& A,
                                     const ExtensionParameter& P);

/// Converse direction: recover the contraction parameter of an extension
/// A subset A_hat at the point zeta in C_+.
ExtensionParameter extension_parameter(const LinearRelation& A,
                                       const LinearRelation& A_hat,
                                       Complex zeta);

/// A -+ N_zeta(A*): the unique maximal dissipative extension with
/// dim N_zeta = eta_-(A), for zeta in C_+.
LinearRelation maximal_dissipative_extension(const LinearRelation& A,
                                             Complex zeta);

/// A -+ N_alpha(A*) for real quasi-regular alpha and equal indices;
/// the result is selfadjoint.
LinearRelation selfadjoint_extension_at(const LinearRelation& A, double alpha);

/// Orthogonal join V (+) W of contractions; validates contractivity of the
/// join and, for isometric V, the domain/range orthogonality conditions.
LinearRelation contractive_join(const LinearRelation& V,
                                const LinearRelation& W);

/// eta_e(V) = n - dim dom V for a closed contraction, cross-checked
/// against the deficiency index at a point of modulus > 1.
Eigen::Index eta_e(const LinearRelation& V);

/// (eta_-(A), eta_-(A_hat), dim[A_hat/A]); asserts the index identity
/// eta_-(A) = eta_-(A_hat) + dim[A_hat/A].
std::tuple<Eigen::Index, Eigen::Index, Eigen::Index> index_budget(
    const LinearRelation& A, const LinearRelation& A_hat);

}  // namespace relcalc
