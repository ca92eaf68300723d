#pragma once

#include <stdexcept>
#include <string>

namespace ringga {

/// Raised when an argument or configuration value is outside its domain.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by `step` once a population has consumed its evaluation budget.
class budget_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a result grid lacks a (function, operator) cell.
class missing_cell : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ringga
