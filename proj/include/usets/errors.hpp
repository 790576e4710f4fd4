#pragma once

#include <stdexcept>
#include <string>

namespace usets {

/// Raised when an input violates a documented precondition or invariant.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its size guard.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the I/O layer when a file cannot be read or written.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Absolute tolerance shared by all value comparisons in the library
// (classification against 1, rank tie grouping, test assertions).
inline constexpr double value_tolerance = 1e-9;

}  // namespace usets
