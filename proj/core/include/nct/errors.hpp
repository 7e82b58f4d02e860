#pragma once

#include <stdexcept>
#include <string>

namespace nct {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Checked integer arithmetic left the 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Objects over lattices of different dimension were combined.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// An argument violates an operation precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Malformed configuration or data file.
class ParseError : public Error {
public:
    using Error::Error;
};

// A truncation request exceeds the configured matrix size cap.
class MemoryCapExceeded : public Error {
public:
    using Error::Error;
};

// The truncated operator is numerically singular.
class SingularTruncation : public Error {
public:
    using Error::Error;
};

// Neumann inversion requires a nonzero coefficient at the origin.
class NotDiagonallyDominant : public Error {
public:
    using Error::Error;
};

// An iterative estimate failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last)
        : Error(what), last_estimate(last) {}
    double last_estimate;
};

}  // namespace nct
