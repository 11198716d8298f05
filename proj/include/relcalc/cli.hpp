#pragma once

#include <iosfwd>

namespace relcalc {

/// Command-line entry point.  Subcommands:
///   analyze <file>                      classification + parts report
///   adjoint <file>                      adjoint relation document
///   ztransform <file> --zeta <c>        Z-transformed relation document
///   extend <A-file> --k <matrix-file> [--zeta <c>]
///   spectrum <file>                     pencil eigenvalue report
///   jacobi --b <csv> --q <csv> --n <int> --tau <c|inf> [--report eig|validate]
///   debranges --roots <csv> --tau <c> [--w <c>] [--report eig|phi|validate]
/// Complex literals use the "a+bi" form; `inf` is accepted for tau.
/// Exit codes: 0 success, 1 schema/usage errors, 2 precondition errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace relcalc
