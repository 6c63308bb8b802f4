#pragma once

#include <stdexcept>

namespace rmom {

// Interface misuse: bad dimensions, indices or parameters out of range.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation produced an invalid result: non-PSD state, missing root,
// failed convergence.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rmom
