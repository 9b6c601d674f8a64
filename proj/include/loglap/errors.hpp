#pragma once

#include <stdexcept>
#include <string>

namespace loglap {

// Invalid constructor or operation parameters (N < 2, r1 >= r2, ...).
class ParameterDomainError : public std::invalid_argument {
public:
    explicit ParameterDomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mixing points of different space kinds, wrong word length, etc.
class TypeError : public std::invalid_argument {
public:
    explicit TypeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Non-finite values or structurally broken inputs.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncated kernel row with zero mass (r too large for the space).
class DegenerateTruncationError : public std::runtime_error {
public:
    explicit DegenerateTruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mass matrix numerically singular; carries the smallest pivot seen.
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& msg, double pivot)
        : std::runtime_error(msg), smallest_pivot(pivot) {}
    double smallest_pivot;
};

// A fit or verdict could not be established from the data.
class UndeterminedError : public std::runtime_error {
public:
    explicit UndeterminedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis incompatible with the requested operator domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// File and path problems in report emission.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace loglap
