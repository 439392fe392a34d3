#pragma once

#include <stdexcept>
#include <string>

namespace quditbraid {

// Requested dense object exceeds the configured size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data (file contents, state amplitudes) failed validation.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition failure for operations requiring a unitary input.
class NotUnitaryError : public std::invalid_argument {
public:
    NotUnitaryError(const std::string& msg, double residual)
        : std::invalid_argument(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace quditbraid
