#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

namespace qmeas {

// Pointer coupling scale p and the system eigenvalue lambda the pointer state
// is conditioned on.
struct PointerCoupling {
    double p = 0.0;
    double lambda = 0.0;
};

// Mean thermal oscillator energy sum: omega e^{-beta omega} / (1 - e^{-beta omega})
// per mode (Bose-Einstein). Returns 0 for infinite beta.
double thermal_energy_bose_einstein(std::span<const Mode> modes, const ThermalParams& thermal);

// Same sum with the denominator squared. Kept alongside the standard form so
// the Fock oracle can arbitrate which one the thermal-state trace actually
// gives; see the oracle tests.
double thermal_energy_squared_denominator(std::span<const Mode> modes,
                                          const ThermalParams& thermal);

// Initial pointer energy <E_P>(0); the Bose-Einstein form, which the oracle
// confirms.
double pointer_energy_initial(std::span<const Mode> modes, const ThermalParams& thermal);

// Measurement-induced pointer energy change
//   <dE_P>_lambda(t) = 4 p^2 lambda^2 sum_m (g_m^2/omega_m) sin^2(omega_m t/2).
// Nonnegative, zero at t = 0, independent of beta.
double pointer_energy_change_discrete(std::span<const Mode> modes, const PointerCoupling& c,
                                      double t);

// Ohmic (n = 1) continuum limit 2 Omega omega_d lambda^2 p^2 u^2/(1+u^2),
// u = omega_d t. Saturates at 2 Omega omega_d lambda^2 p^2.
double pointer_energy_change_ohmic(const OhmicFamily& family, const PointerCoupling& c, double t);

// <X>_lambda(t) = -4 p lambda sum_m (g_m^2/omega_m) sin^2(omega_m t/2);
// satisfies dE = -p lambda <X> identically.
double pointer_x_change_discrete(std::span<const Mode> modes, const PointerCoupling& c, double t);

// Ohmic continuum limit -2 Omega omega_d lambda p u^2/(1+u^2).
double pointer_x_change_ohmic(const OhmicFamily& family, const PointerCoupling& c, double t);

// Coherent amplitude <a_m> left in mode m when the coupling is switched off
// at t_meas: -(p lambda g/omega)(1 - e^{-i omega t_meas}). Validated against
// the Fock oracle before the dephasing acceptance run uses it.
std::complex<double> switchoff_amplitude(const Mode& mode, const PointerCoupling& c, double t_meas);

// <X> at time tau after switch-off: sum_m g_m * 2 Re[alpha_m e^{-i omega_m tau}].
// Reduces bit-exactly to pointer_x_change_discrete at tau = 0; a single mode
// never dephases, many discretized modes do.
double pointer_x_after_switchoff(std::span<const Mode> modes, const PointerCoupling& c,
                                 double t_meas, double tau);

// Conditional pointer observables with per-mode breakdowns.
struct PointerReport {
    double e_initial = 0.0;
    double delta_e = 0.0;
    double x = 0.0;
    std::vector<double> per_mode_delta_e;
    std::vector<double> per_mode_x;
};

PointerReport pointer_report(std::span<const Mode> modes, const PointerCoupling& c,
                             const ThermalParams& thermal, double t);

}  // namespace qmeas
