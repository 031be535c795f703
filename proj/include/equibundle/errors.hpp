#pragma once

#include <stdexcept>
#include <string>

namespace equibundle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different base fields.
class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("field mismatch") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A value violates the invariant of the type being constructed
/// (non-unit determinant, non-homogeneous relation, cyclic poset, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The inputs are well formed but outside the class an operation can
/// decide (for example a graded algebra that is not connected).
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Malformed input document. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace equibundle
