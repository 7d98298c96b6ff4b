#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A positive entry follows a smaller one (input is not a partition).
struct NotAPartition : Error {
    using Error::Error;
};

// Inner shape is not contained in the outer shape.
struct InvalidSkewShape : Error {
    using Error::Error;
};

// One-line notation is not a bijection on {1..n}.
struct NotAPermutation : Error {
    using Error::Error;
};

struct InvalidShape : Error {
    using Error::Error;
};

// Weight total differs from the skew shape size.
struct SizeMismatch : Error {
    using Error::Error;
};

// Dimension query on a polytope with no lattice points.
struct EmptyPolytope : Error {
    using Error::Error;
};

struct DuplicateAbscissa : Error {
    using Error::Error;
};

// h*-extraction produced a non-integer entry: the input polynomial is not
// an Ehrhart polynomial of the declared degree.
struct NonIntegralHStar : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

// Cover input violates natural labeling, contains a cycle, or lists a
// transitively implied cover.
struct InvalidPoset : Error {
    using Error::Error;
};

// A cross-check evaluation disagreed with the interpolated polynomial.
struct VerificationError : Error {
    using Error::Error;
};

// An oracle enumeration exceeded its node or time budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Instance rejected up front as too large to attempt.
struct ResourceGuard : Error {
    using Error::Error;
};

// A cooperative progress hook requested cancellation.
struct Cancelled : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace kostka
