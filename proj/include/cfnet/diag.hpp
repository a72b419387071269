#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cfnet {

/// A positioned message produced by the parser or validator.
struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;

    std::string str() const {
        return "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    }
};

/// Bad or inconsistent input (netlist, config, query). CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A well-posed request with no answer: unsatisfiable constraint set,
/// post-selection on a dark port, conditioning on probability zero.
/// CLI exit code 2.
class UnsatisfiableError : public std::runtime_error {
  public:
    explicit UnsatisfiableError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numeric failure (lost conservation, non-finite values). CLI exit code 3.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cfnet
