#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (tables, model specs, config files).
/// Carries the 1-based line number when the source is line oriented.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// An argument outside the domain an operation supports.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A sum or quadrature failed to reach the requested tolerance.
/// Carries the best estimate actually achieved.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double achieved, double requested)
        : Error(msg + " (achieved " + std::to_string(achieved) + ", requested " +
                std::to_string(requested) + ")"),
          achieved_(achieved), requested_(requested) {}
    double achieved() const { return achieved_; }
    double requested() const { return requested_; }

private:
    double achieved_;
    double requested_;
};

} // namespace casimir
