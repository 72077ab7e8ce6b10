#pragma once

#include <stdexcept>
#include <string>

namespace qmeas {

// Raised by config parsing/validation in the scenario layer (CLI exit 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested closed form does not exist for this spectral family (e.g. the
// Ohmic-only formulas called with n != 1).
struct UnsupportedFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cutoff refinement exhausted its budget before the observable settled.
// Carries the best estimate seen and the last inter-level delta.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, double best, double delta, int cutoff)
        : std::runtime_error(msg), best_estimate(best), last_delta(delta), last_cutoff(cutoff) {}
    double best_estimate;
    double last_delta;
    int last_cutoff;
};

// Fock-space dimension exceeds the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qmeas
