#pragma once

#include <stdexcept>
#include <string>

namespace relcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RELCALC_ERROR(Name)                    \
  struct Name : Error {                        \
    using Error::Error;                        \
  }

RELCALC_ERROR(DimensionMismatch);
RELCALC_ERROR(NonTrivialIntersection);
RELCALC_ERROR(NotAnOperator);
RELCALC_ERROR(DomainNotContained);
RELCALC_ERROR(NonSquareRelation);
RELCALC_ERROR(SingularPencil);
RELCALC_ERROR(NotSymmetric);
RELCALC_ERROR(NotDissipative);
RELCALC_ERROR(NotAContraction);
RELCALC_ERROR(DomainNotInDeficiencySpace);
RELCALC_ERROR(NotAnExtension);
RELCALC_ERROR(AlphaNotQuasiRegular);
RELCALC_ERROR(IndicesUnequal);
RELCALC_ERROR(JoinNotContractive);
RELCALC_ERROR(NotOrthogonal);
RELCALC_ERROR(ZetaIsEigenvalue);
RELCALC_ERROR(DegenerateMobius);
RELCALC_ERROR(TauOutsideDisk);
RELCALC_ERROR(WNotInUpperHalfPlane);
RELCALC_ERROR(RootInUpperHalfPlaneOrReal);
RELCALC_ERROR(KernelNotPositive);
RELCALC_ERROR(LambdaNotARoot);
RELCALC_ERROR(DegenerateKernel);
RELCALC_ERROR(SchemaError);

#undef RELCALC_ERROR

}  // namespace relcalc
