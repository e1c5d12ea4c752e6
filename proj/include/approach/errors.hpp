#pragma once

#include <stdexcept>
#include <string>

namespace approach {

struct InfeasibleFlagError : std::runtime_error {
    explicit InfeasibleFlagError(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleTargetError : std::runtime_error {
    explicit InfeasibleTargetError(const std::string& what) : std::runtime_error(what) {}
};

struct NoNormalError : std::runtime_error {
    explicit NoNormalError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientExplorationError : std::runtime_error {
    explicit InsufficientExplorationError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidWitnessError : std::runtime_error {
    explicit InvalidWitnessError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace approach
