#pragma once

#include <stdexcept>
#include <string>

namespace cgsig {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// parse errors -> 2, precondition violations -> 3, unsupported inputs -> 4,
// verification mismatches -> 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input could not be parsed (malformed JSON, bad rational string, ...).
struct ParseError : Error {
    using Error::Error;
};

// A documented precondition of an operation was violated.
struct PreconditionError : Error {
    using Error::Error;
};

// Presented group has a free part; homology of the branched cover must be finite.
struct InfiniteGroupError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// symmetric_signature requires a symmetric matrix.
struct NotSymmetricError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Surgery-formula meridian values must be nonzero mod q.
struct ZeroMeridianValueError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Vectors/matrices of incompatible sizes.
struct DimensionMismatchError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Family indices must be strictly increasing.
struct IndexNotMonotoneError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Analytic bound hypotheses not satisfied (summand index too small for the genus).
struct HypothesisViolationError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Obstruction machinery is restricted to elementary abelian 5-groups.
struct UnsupportedGroupError : Error {
    using Error::Error;
};

// Certificate JSON is structurally invalid.
struct MalformedCertificateError : ParseError {
    using ParseError::ParseError;
};

// A recomputed quantity disagrees with its frozen expected value.
struct VerificationMismatchError : Error {
    using Error::Error;
};

} // namespace cgsig
