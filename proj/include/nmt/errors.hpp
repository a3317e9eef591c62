#pragma once

#include <stdexcept>
#include <string>

namespace nmt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical parameter is out of its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A degree-of-freedom, point or channel index does not exist.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Model matrices violate symmetry or definiteness requirements.
class ModelError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Input data is degenerate (zero norm, rank deficient, zero level).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Argument outside of the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or config. Carries an optional line number.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what, int line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace nmt
