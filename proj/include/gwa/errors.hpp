#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live over different declared bases.
struct BasisMismatch : Error {
    using Error::Error;
};

// Multiplication requested on a basis without a products table.
struct UnsupportedProduct : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Nonzero element with no inverse in the declared algebra.
struct NotInvertible : Error {
    using Error::Error;
};

// Operation requires pairwise distinct roots.
struct DegenerateRoots : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// Integer matrix with determinant other than +-1.
struct NonUnimodular : Error {
    using Error::Error;
};

// det = -1 input where a det = +1 matrix is required; normalize first.
struct NormalizeFirst : Error {
    using Error::Error;
};

struct Cn3Violated : Error {
    using Error::Error;
};

// A checked identity failed; signals a bug, not a valid state.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace gwa
