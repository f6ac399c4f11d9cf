#pragma once

#include <stdexcept>
#include <string>

namespace toomk {

// Base class for all library errors. The CLI maps these to its exit-code
// contract: validation/usage -> 2, property violations -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected configuration input. what() carries the kind name verbatim,
// e.g. "DuplicatePoints: points[1] and points[2] are both 1".
class ValidationError : public Error {
public:
    enum class Kind {
        BaseTooSmall,
        SplitTooSmall,
        WrongPointCount,
        DuplicatePoints,
    };

    ValidationError(Kind kind, const std::string& message)
        : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// The Vandermonde system had no usable pivot. Unreachable for validated
// configs; signals a points-distinctness violation upstream.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// An interpolated value had denominator != 1. Unreachable for correct
// split/evaluate/interpolate round trips; never silently rounded.
class NonIntegralResultError : public Error {
public:
    using Error::Error;
};

}  // namespace toomk
