#pragma once

#include <stdexcept>
#include <string>

namespace netprio {

// Error taxonomy mirrored by the CLI exit codes: validation and parse
// failures exit 1, convergence failures exit 2, I/O failures exit 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file contents. Carries the 1-based physical line number.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a precondition or invariant.
class ValidationError : public Error {
public:
    using Error::Error;

    ValidationError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Iterative solver failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(int iterations, double residual);

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

// Filesystem-level failure (missing file, unreadable path, write error).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace netprio
