#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmeas {

// Inverse temperature in natural units (hbar = k_B = 1). beta = +inf is the
// zero-temperature limit and replaces every coth(beta*omega/2) factor by 1
// exactly, so the low-T closed forms can be compared without overflow.
struct ThermalParams {
    double beta = std::numeric_limits<double>::infinity();

    static ThermalParams infinite() { return {std::numeric_limits<double>::infinity()}; }

    bool is_infinite() const { return std::isinf(beta); }

    void validate() const {
        if (!(beta > 0.0)) throw std::invalid_argument("ThermalParams: beta must be > 0 or infinite");
    }
};

}  // namespace qmeas
