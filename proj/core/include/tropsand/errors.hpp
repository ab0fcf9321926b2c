#pragma once

#include <stdexcept>
#include <string>

namespace tropsand {

/// Base class for all tropsand errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad points, bad config, bad file contents.
struct InputError : Error {
    using Error::Error;
};

/// A series violates its contract (empty monomial set, nonzero boundary, ...).
struct InvalidSeriesError : InputError {
    using InputError::InputError;
};

/// A point on or outside the boundary was passed where an interior point is required.
struct BoundaryPointError : InputError {
    using InputError::InputError;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace tropsand
