#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trajmult {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression or literal. `position()` is a 0-based offset into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operands disagree on variable count, vector length or matrix shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold (e.g. the field vanishes at the basepoint).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computation routes disagreed. Always an implementation bug.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace trajmult
