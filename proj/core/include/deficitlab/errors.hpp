#pragma once

#include <stdexcept>
#include <string>

namespace deficitlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dimension / shape mismatch between operands.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// Input fails a mathematical validity check (Hermiticity, trace,
/// positivity, normalization, parse errors on state files, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Iterative procedure failed to converge within its budget.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

/// Unknown name or out-of-range parameter at an API boundary.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace deficitlab
