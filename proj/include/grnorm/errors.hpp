#pragma once

#include <stdexcept>
#include <string>

namespace grnorm {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on multi-branch elements with differing branch counts.
struct BranchMismatchError : Error {
    using Error::Error;
};

// A series order was requested but the truncation hides it (no known term
// below the precision bound).
struct UnknownOrderError : Error {
    using Error::Error;
};

// A coefficient inside the requested box is not covered by the operand's
// precision.
struct UnknownCoefficientError : Error {
    using Error::Error;
};

// The working box is too small to certify a conductor.
struct BoxTooSmallError : Error {
    using Error::Error;
};

// The input does not parametrize a reduced curve (repeated branch, or a
// branch on which every generator vanishes).
struct NotReducedError : Error {
    using Error::Error;
};

// A generator has a unit component, so the parametrized ring is not local.
struct NonLocalError : Error {
    using Error::Error;
};

// The alleged fractional ideal is not a module over the given ring.
struct NotAnIdealError : Error {
    using Error::Error;
};

// dim_quotient was called on a pair that is not nested.
struct NotNestedError : Error {
    using Error::Error;
};

// A redundant internal cross-check (computed two independent ways) failed.
// Seeing this means a bug, never bad user input.
struct InternalCheckError : Error {
    using Error::Error;
};

// Syntax error in the curve-spec text format; line/col are 1-based.
struct SpecParseError : Error {
    long line;
    long col;
    SpecParseError(long line_, long col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

} // namespace grnorm
