#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pureres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or complex-file text. Line and column are 1-based;
/// line is 0 when the text was a single expression.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

/// A map required to be non-zero has only zero entries.
class ZeroMapError : public Error {
public:
    using Error::Error;
};

/// Consecutive maps of a complex do not compose to zero.
class CompositionNonzeroError : public Error {
public:
    using Error::Error;
};

/// A presentation that must be homogeneous for its declared shifts is not.
class NotHomogeneousError : public Error {
public:
    using Error::Error;
};

/// No finite-difference row of the Hilbert-Samuel function became constant
/// over the requested window before kmax.
class NoStabilizationError : public Error {
public:
    using Error::Error;
};

/// Invertibility requirement on a change of basis failed.
class SingularBasisChangeError : public Error {
public:
    using Error::Error;
};

} // namespace pureres
