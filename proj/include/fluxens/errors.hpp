#pragma once

#include <stdexcept>
#include <string>

namespace fluxens {

// Invalid input data or configuration. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to meet its tolerance. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate_a, double estimate_b)
        : std::runtime_error(what), estimate_a(estimate_a), estimate_b(estimate_b) {}
    double estimate_a;
    double estimate_b;
};

// File / stream problems. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fluxens
