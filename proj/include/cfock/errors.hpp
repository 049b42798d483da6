#pragma once

#include <stdexcept>
#include <string>

namespace cfock {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical property the computation is allowed to refute. These are
// findings, not bugs: callers report them instead of repairing them.
struct CheckFailure : Error {
    using Error::Error;
};

struct TriangularityFailure : CheckFailure {
    using CheckFailure::CheckFailure;
};

struct CongruenceFailure : CheckFailure {
    using CheckFailure::CheckFailure;
};

// Contract violations. Reaching one of these means a bug in the caller or
// in the library itself.
struct InternalError : Error {
    using Error::Error;
};

struct NotDivisible : InternalError {
    using InternalError::InternalError;
};

struct SizeMismatch : InternalError {
    using InternalError::InternalError;
};

struct InvalidNode : InternalError {
    using InternalError::InternalError;
};

struct NotKleshchev : InternalError {
    using InternalError::InternalError;
};

struct NotInSpan : InternalError {
    using InternalError::InternalError;
};

struct EliminationDivergence : InternalError {
    using InternalError::InternalError;
};

} // namespace cfock
