#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace persista {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face is born strictly after one of its cofaces.
class MonotonicityError : public Error {
public:
    using Error::Error;
};

/// A filtration or complex violates one of its structural invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in prime field") {}
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

/// Integer arithmetic left the 64-bit range. Never wraps silently.
class OverflowError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class NotSubcomplexError : public Error {
public:
    using Error::Error;
};

/// A, B do not cover X as simplicial complexes.
class CoverError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// Homology and cohomology (or absolute and relative) barcodes disagree.
/// Any occurrence is an implementation bug.
class DualityViolation : public Error {
public:
    using Error::Error;
};

class OracleCapExceeded : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

} // namespace persista
