#pragma once

#include <span>
#include <string>
#include <vector>

#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

namespace qmeas {

// Discrete spectral decoherence function
//   Gamma(t) = sum_k (g_k^2 / omega_k^2) sin^2(omega_k t / 2) coth(beta omega_k / 2),
// with the coth factor replaced by 1 when beta is infinite. Deterministic
// fixed-tree summation over modes.
double gamma_discrete(std::span<const Mode> modes, double t, const ThermalParams& thermal);

// Continuum limit of gamma_discrete for a power-law family: adaptive
// quadrature of Omega omega^{n-2} exp(-omega/omega_d) sin^2(omega t/2)
// coth(beta omega/2) over (0, inf), with panel splitting at the sin^2
// half-period so rapid oscillation at large t is resolved.
double gamma_continuum(const OhmicFamily& family, double t, const ThermalParams& thermal,
                       double rel_tol = 1e-8);

// Zero-temperature Ohmic closed form (Omega/4) ln[1 + (omega_d t)^2].
// Throws UnsupportedFamilyError unless n == 1.
double gamma_ohmic_low_temp(const OhmicFamily& family, double t);

// Off-diagonal suppression exp[-2 b^2 (lambda1-lambda2)^2 Gamma]; exactly 1
// for equal eigenvalues or b = 0.
double suppression_factor(double b, double lambda1, double lambda2, double gamma);

enum class Regime { Quiet, Quantum, Thermal, Crossover };
const char* to_string(Regime r);

// Decade-margin classifier over the orderings of t against 1/omega_d and
// beta: quiet for t < 1/(10 omega_d), quantum for 10/omega_d < t < beta/10,
// thermal for t > 10 beta, crossover in between.
Regime classify_regime(double t, const OhmicFamily& family, const ThermalParams& thermal);

// Least-squares slope of log Gamma vs log t over a grid that must lie
// entirely in the thermal regime; estimates the power 2-n.
double fit_thermal_exponent(const OhmicFamily& family, const ThermalParams& thermal,
                            std::span<const double> t_grid, double rel_tol = 1e-8);

// Gamma(t) plus per-eigenvalue-pair suppression factors over a time grid.
// suppression[i] holds the factors for pairs (a, b), a < b, in row-major
// pair order.
struct DecoherenceCurve {
    std::vector<double> times;
    std::vector<double> gamma;
    std::vector<std::vector<double>> suppression;
    std::vector<std::pair<int, int>> pairs;
};

DecoherenceCurve decoherence_curve(const ModeEnsemble& bath, const ThermalParams& thermal,
                                   std::span<const double> lambdas, double b,
                                   std::span<const double> times, double rel_tol = 1e-8);

}  // namespace qmeas
