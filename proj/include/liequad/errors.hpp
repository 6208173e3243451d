#pragma once

#include <stdexcept>
#include <string>

namespace liequad {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, type strings, weights, words, files).
struct ParseError : Error {
    using Error::Error;
};

/// A requested construction exceeds the configured dimension cap.
struct DimensionCapError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug upstream.
struct InvariantError : Error {
    using Error::Error;
};

} // namespace liequad
