#pragma once

#include <optional>
#include <span>
#include <vector>

namespace qmeas {

// One bosonic mode: angular frequency omega and a real coupling strength g,
// both in natural units.
struct Mode {
    double omega = 0.0;
    double g = 0.0;
};

void validate_modes(std::span<const Mode> modes);

// Power-law spectral family D(omega) g^2(omega) = Omega * omega^n with an
// exponential Debye cutoff at omega_d. Density of states and coupling are
// never separated; only their product is represented.
struct OhmicFamily {
    double big_omega = 1.0;  // overall amplitude Omega
    double n = 1.0;          // spectral exponent, n > 0
    double omega_d = 1.0;    // Debye cutoff frequency

    // Gamma(t) diverges at large times only for n < 2; for n >= 2 decoherence
    // stays incomplete. Informational, not a constructor error.
    bool fully_decohering() const { return n < 2.0; }

    void validate() const;
};

// Omega * omega^n * exp(-omega/omega_d). Throws std::domain_error for
// omega < 0.
double spectral_weight(const OhmicFamily& family, double omega);

// Closed form of the total spectral mass: Omega * Gamma(n+1) * omega_d^{n+1}.
double integrated_spectral_weight(const OhmicFamily& family);

// Gauss-Legendre discretization of the continuum family into K modes on
// (0, omega_max]. omega_max <= 0 selects the default 40*omega_d, which
// truncates the exponential tail below 1e-17 relative mass. Each mode gets
// g_k^2 = spectral_weight(omega_k) * w_k.
std::vector<Mode> discretize(const OhmicFamily& family, int k, double omega_max = 0.0);

// Either an explicit mode list or a continuum family with a chosen
// discretization count. Immutable after construction.
class ModeEnsemble {
public:
    static ModeEnsemble from_modes(std::vector<Mode> modes);
    static ModeEnsemble from_family(const OhmicFamily& family, int k, double omega_max = 0.0);

    const std::vector<Mode>& modes() const { return modes_; }
    const std::optional<OhmicFamily>& family() const { return family_; }
    int discretization_count() const { return k_; }

private:
    ModeEnsemble() = default;
    std::vector<Mode> modes_;
    std::optional<OhmicFamily> family_;
    int k_ = 0;
};

}  // namespace qmeas
