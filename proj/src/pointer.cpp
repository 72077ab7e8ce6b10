#include "qmeas/pointer.hpp"

#include <cmath>
#include <stdexcept>

#include "qmeas/errors.hpp"
#include "qmeas/numerics.hpp"

namespace qmeas {

namespace {

// Shared spectral sum S(t) = sum_m (g_m^2/omega_m) sin^2(omega_m t/2).
// dE = 4 p^2 l^2 S and <X> = -4 p l S are both built from the same terms so
// the identity dE = -p l <X> holds to rounding.
std::vector<double> spectral_terms(std::span<const Mode> modes, double t) {
    const double half_t = 0.5 * t;
    std::vector<double> terms(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        const double s = std::sin(m.omega * half_t);
        terms[i] = (m.g * m.g) / m.omega * (s * s);
    }
    return terms;
}

double ohmic_saturation_shape(const OhmicFamily& family, double t) {
    family.validate();
    if (family.n != 1.0)
        throw UnsupportedFamilyError("pointer continuum closed forms require n == 1");
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    const double u = family.omega_d * t;
    return (u * u) / (1.0 + u * u);
}

}  // namespace

double thermal_energy_bose_einstein(std::span<const Mode> modes, const ThermalParams& thermal) {
    validate_modes(modes);
    thermal.validate();
    if (thermal.is_infinite()) return 0.0;
    std::vector<double> terms(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const double e = std::exp(-thermal.beta * modes[i].omega);
        terms[i] = modes[i].omega * e / (1.0 - e);
    }
    return pairwise_sum(terms);
}

double thermal_energy_squared_denominator(std::span<const Mode> modes,
                                          const ThermalParams& thermal) {
    validate_modes(modes);
    thermal.validate();
    if (thermal.is_infinite()) return 0.0;
    std::vector<double> terms(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const double e = std::exp(-thermal.beta * modes[i].omega);
        terms[i] = modes[i].omega * e / ((1.0 - e) * (1.0 - e));
    }
    return pairwise_sum(terms);
}

double pointer_energy_initial(std::span<const Mode> modes, const ThermalParams& thermal) {
    return thermal_energy_bose_einstein(modes, thermal);
}

double pointer_energy_change_discrete(std::span<const Mode> modes, const PointerCoupling& c,
                                      double t) {
    validate_modes(modes);
    if (t < 0.0) throw std::invalid_argument("pointer_energy_change_discrete: t must be >= 0");
    const double sum = pairwise_sum(spectral_terms(modes, t));
    return 4.0 * c.p * c.p * c.lambda * c.lambda * sum;
}

double pointer_energy_change_ohmic(const OhmicFamily& family, const PointerCoupling& c, double t) {
    return 2.0 * family.big_omega * family.omega_d * c.lambda * c.lambda * c.p * c.p *
           ohmic_saturation_shape(family, t);
}

double pointer_x_change_discrete(std::span<const Mode> modes, const PointerCoupling& c, double t) {
    validate_modes(modes);
    if (t < 0.0) throw std::invalid_argument("pointer_x_change_discrete: t must be >= 0");
    const double sum = pairwise_sum(spectral_terms(modes, t));
    return -4.0 * c.p * c.lambda * sum;
}

double pointer_x_change_ohmic(const OhmicFamily& family, const PointerCoupling& c, double t) {
    return -2.0 * family.big_omega * family.omega_d * c.lambda * c.p *
           ohmic_saturation_shape(family, t);
}

std::complex<double> switchoff_amplitude(const Mode& mode, const PointerCoupling& c,
                                         double t_meas) {
    if (t_meas < 0.0) throw std::invalid_argument("switchoff_amplitude: t_meas must be >= 0");
    const std::complex<double> phase = std::polar(1.0, -mode.omega * t_meas);
    return -(c.p * c.lambda * mode.g / mode.omega) * (1.0 - phase);
}

double pointer_x_after_switchoff(std::span<const Mode> modes, const PointerCoupling& c,
                                 double t_meas, double tau) {
    validate_modes(modes);
    if (t_meas < 0.0 || tau < 0.0)
        throw std::invalid_argument("pointer_x_after_switchoff: times must be >= 0");
    // Per mode: g * 2 Re[alpha e^{-i omega tau}]
    //         = -(4 p l g^2/omega) sin(omega t/2) sin(omega (tau + t/2)),
    // written so tau = 0 reproduces the sin^2 terms of the in-coupling sum
    // bit for bit.
    const double half_t = 0.5 * t_meas;
    std::vector<double> terms(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        const double s = std::sin(m.omega * half_t);
        terms[i] = (m.g * m.g) / m.omega * (s * std::sin(m.omega * (tau + half_t)));
    }
    return -4.0 * c.p * c.lambda * pairwise_sum(terms);
}

PointerReport pointer_report(std::span<const Mode> modes, const PointerCoupling& c,
                             const ThermalParams& thermal, double t) {
    validate_modes(modes);
    thermal.validate();
    if (t < 0.0) throw std::invalid_argument("pointer_report: t must be >= 0");

    PointerReport rep;
    rep.e_initial = pointer_energy_initial(modes, thermal);
    const std::vector<double> terms = spectral_terms(modes, t);
    rep.per_mode_delta_e.resize(terms.size());
    rep.per_mode_x.resize(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        rep.per_mode_delta_e[i] = 4.0 * c.p * c.p * c.lambda * c.lambda * terms[i];
        rep.per_mode_x[i] = -4.0 * c.p * c.lambda * terms[i];
    }
    const double sum = pairwise_sum(terms);
    rep.delta_e = 4.0 * c.p * c.p * c.lambda * c.lambda * sum;
    rep.x = -4.0 * c.p * c.lambda * sum;
    return rep;
}

}  // namespace qmeas
