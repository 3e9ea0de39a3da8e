#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace calabi {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing exact-rational and big-float values (or different float
// precisions) in one operation. Coercion is never done silently.
struct BackendMismatch : Error {
    using Error::Error;
};

// Vector / matrix / series dimensions disagree.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Query or construction past a series' truncation order. Distinguishes
// "coefficient is zero" from "coefficient is unknown".
struct TruncationError : Error {
    using Error::Error;
};

// Invalid numeric domain: division by zero, non-positive radius,
// branch-cut violation, unbound parameter, negative mass parameter, ...
struct DomainError : Error {
    using Error::Error;
};

// Syntax error in potential text or in a scalar/parameter literal.
// Carries the byte offset of the offending token.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Bad command invocation: unknown preset or sweep parameter, invalid
// flag combination. Maps to exit code 1.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace calabi
