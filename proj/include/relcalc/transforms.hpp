#pragma once

#include "relcalc/relation.hpp"

namespace relcalc {

/// Cayley transform C_zeta T = {(g - conj(zeta) f, g - zeta f)}.
LinearRelation cayley(const LinearRelation& T, Complex zeta);

/// Z transform Z_zeta T = conj(zeta) * C_zeta T.
/// For |zeta| = 1, zeta in C_+, maps dissipative relations to contractions
/// and symmetric relations to isometries.
LinearRelation z_transform(const LinearRelation& T, Complex zeta);

}  // namespace relcalc
