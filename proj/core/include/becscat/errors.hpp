#pragma once

#include <stdexcept>
#include <string>

namespace becscat {

// Configuration / input-document problems. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature or root-finding failed to reach the requested tolerance.
// CLI exit code 4.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Output destination problems. CLI exit code 5.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations on physical inputs throw std::domain_error
// (CLI exit code 3).

} // namespace becscat
