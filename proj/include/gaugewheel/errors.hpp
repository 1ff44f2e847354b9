#pragma once

#include <stdexcept>
#include <string>

namespace gaugewheel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration value violates a documented invariant.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// The dressed basis is undefined (delta == 0 and Rabi frequency == 0).
class DegeneratePoint : public Error {
public:
    using Error::Error;
};

/// Evaluation requested on (or too close to) the beam axis r = 0.
class AxisError : public Error {
public:
    using Error::Error;
};

/// Winding number l == 0 where a rotation is required.
class ZeroWinding : public Error {
public:
    using Error::Error;
};

/// Field magnitude vanishes where a direction is needed.
class NullField : public Error {
public:
    using Error::Error;
};

/// A sampling region contains no admissible point.
class EmptyRegion : public Error {
public:
    using Error::Error;
};

class UnknownPreset : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written; the message names the path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gaugewheel
