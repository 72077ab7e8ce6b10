#include "qmeas/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qmeas/numerics.hpp"

namespace qmeas {

void validate_modes(std::span<const Mode> modes) {
    if (modes.empty()) throw std::invalid_argument("mode list must be nonempty");
    for (const Mode& m : modes) {
        if (!(m.omega > 0.0)) throw std::invalid_argument("Mode: omega must be > 0");
        if (!std::isfinite(m.g)) throw std::invalid_argument("Mode: g must be finite");
    }
}

void OhmicFamily::validate() const {
    if (!(big_omega > 0.0)) throw std::invalid_argument("OhmicFamily: big_omega must be > 0");
    if (!(n > 0.0)) throw std::invalid_argument("OhmicFamily: n must be > 0");
    if (!(omega_d > 0.0)) throw std::invalid_argument("OhmicFamily: omega_d must be > 0");
}

double spectral_weight(const OhmicFamily& family, double omega) {
    family.validate();
    if (omega < 0.0) throw std::domain_error("spectral_weight: omega must be >= 0");
    if (omega == 0.0) return 0.0;  // omega^n vanishes for n > 0
    return family.big_omega * std::pow(omega, family.n) * std::exp(-omega / family.omega_d);
}

double integrated_spectral_weight(const OhmicFamily& family) {
    family.validate();
    return family.big_omega * std::tgamma(family.n + 1.0) * std::pow(family.omega_d, family.n + 1.0);
}

std::vector<Mode> discretize(const OhmicFamily& family, int k, double omega_max) {
    family.validate();
    if (k < 1) throw std::invalid_argument("discretize: k must be >= 1");
    if (omega_max <= 0.0) omega_max = 40.0 * family.omega_d;

    const GaussLegendre rule = gauss_legendre(k);
    std::vector<Mode> modes(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double omega = 0.5 * omega_max * (rule.nodes[i] + 1.0);
        const double w = 0.5 * omega_max * rule.weights[i];
        modes[static_cast<std::size_t>(i)] = Mode{omega, std::sqrt(spectral_weight(family, omega) * w)};
    }
    return modes;
}

ModeEnsemble ModeEnsemble::from_modes(std::vector<Mode> modes) {
    validate_modes(modes);
    ModeEnsemble e;
    e.modes_ = std::move(modes);
    return e;
}

ModeEnsemble ModeEnsemble::from_family(const OhmicFamily& family, int k, double omega_max) {
    ModeEnsemble e;
    e.modes_ = discretize(family, k, omega_max);
    e.family_ = family;
    e.k_ = k;
    return e;
}

}  // namespace qmeas
