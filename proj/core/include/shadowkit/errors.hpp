#pragma once

#include <stdexcept>

namespace shadowkit {

// Input outside an operation's domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact arithmetic left the representable range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// A search exceeded its configured work limit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric solve did not reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shadowkit
