#pragma once

#include <stdexcept>
#include <string>

namespace netenergy {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands do not conform (wrong shapes, non-square where square required).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A pivot fell below the singularity threshold during elimination.
struct SingularMatrix : Error {
    using Error::Error;
};

/// The eigenvalue iteration exhausted its budget.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// A matrix required to be Hurwitz is not.
struct NotHurwitz : Error {
    using Error::Error;
};

/// The Lyapunov operator turned out singular despite the Hurwitz check,
/// or the solve failed its residual bound. Reported, never patched.
struct SingularOperator : Error {
    using Error::Error;
};

/// No closed-form spectrum exists for the requested coupling family.
struct UnsupportedKind : Error {
    using Error::Error;
};

/// The node system is not first-order where a first-order law applies.
struct NotFirstOrder : Error {
    using Error::Error;
};

/// Trajectories live on different time grids.
struct GridMismatch : Error {
    using Error::Error;
};

/// State blew past the overflow guard during simulation.
struct Divergence : Error {
    using Error::Error;
};

/// Malformed node-system or coupling file. Carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_number)
        : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    int line;
};

}  // namespace netenergy
