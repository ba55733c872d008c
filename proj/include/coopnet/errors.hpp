#pragma once

#include <stdexcept>
#include <string>

namespace coopnet {

// Exit codes used by the CLI. Library code throws; the CLI maps to these.
enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_convergence = 3,
    exit_guard = 4,
};

// Bad input: shape mismatches, out-of-range parameters, malformed files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public ValidationError {
public:
    explicit DimensionMismatch(const std::string& what) : ValidationError(what) {}
};

class NotRowStochastic : public ValidationError {
public:
    explicit NotRowStochastic(const std::string& what) : ValidationError(what) {}
};

// An iterative process exhausted its iteration budget (e.g. periodic chains).
class NonConvergent : public std::runtime_error {
public:
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

// A linear solve failed numerically.
class SingularSystem : public std::runtime_error {
public:
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive oracle was asked for more work than its guard allows.
class CombinatorialBlowup : public std::runtime_error {
public:
    explicit CombinatorialBlowup(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coopnet
