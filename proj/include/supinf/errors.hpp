#pragma once

#include <stdexcept>
#include <string>

namespace supinf {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range configuration input (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

/// Integrator failure: instability, overflow, no admissible plane (CLI exit code 3).
struct SolverError : Error {
    using Error::Error;
};

/// Domain violation: evaluation outside a grid, region outside a ball,
/// dimension below 3, and similar (CLI exit code 4).
struct DomainError : Error {
    using Error::Error;
};

} // namespace supinf
