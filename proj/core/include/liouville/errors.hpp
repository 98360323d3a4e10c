#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// Base class for every failure this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A denominator (or a Moebius map at its pole) hit numerical zero.
struct SingularityError : Error {
    using Error::Error;
};

/// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A per-cell update could not be formed (vanishing denominator, no root bracket).
struct BreakdownError : Error {
    using Error::Error;
};

/// An iterative solve exhausted its iteration budget.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Malformed configuration file or unknown key/value.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace liouville
