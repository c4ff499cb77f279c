#pragma once

#include <stdexcept>
#include <string>

namespace dessin {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: non-bijective image sequence, index out of range,
/// bad key text, corrupt cache record, and similar.
struct ValidationError : Error {
    using Error::Error;
};

/// A configured size bound was exceeded (enumeration edge count,
/// window size, monodromy closure, product size).
struct BoundError : Error {
    using Error::Error;
};

}  // namespace dessin
