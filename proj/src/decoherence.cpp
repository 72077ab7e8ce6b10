#include "qmeas/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "qmeas/errors.hpp"
#include "qmeas/numerics.hpp"

namespace qmeas {

double gamma_discrete(std::span<const Mode> modes, double t, const ThermalParams& thermal) {
    validate_modes(modes);
    thermal.validate();
    if (t < 0.0) throw std::invalid_argument("gamma_discrete: t must be >= 0");
    if (t == 0.0) return 0.0;

    const double half_t = 0.5 * t;
    std::vector<double> terms(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        const double s = std::sin(m.omega * half_t);
        const double th = thermal.is_infinite() ? 1.0 : coth(0.5 * thermal.beta * m.omega);
        terms[i] = (m.g * m.g) / (m.omega * m.omega) * (s * s) * th;
    }
    return pairwise_sum(terms);
}

double gamma_continuum(const OhmicFamily& family, double t, const ThermalParams& thermal,
                       double rel_tol) {
    family.validate();
    thermal.validate();
    if (t < 0.0) throw std::invalid_argument("gamma_continuum: t must be >= 0");
    if (!(family.n > 0.0))
        throw std::domain_error("gamma_continuum: integrand diverges unless n > 0");
    if (t == 0.0) return 0.0;

    const double half_t = 0.5 * t;
    // Written as w^n (sin(w t/2)/w)^2 so the w -> 0 endpoint stays finite in
    // floating point: the naive w^{n-2} sin^2 form produces inf * 0 once
    // sin^2 underflows under tanh-sinh's extreme abscissas.
    auto integrand = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double x = w * half_t;
        const double sc = x < 1e-8 ? half_t : std::sin(x) / w;
        const double th = thermal.is_infinite() ? 1.0 : coth(0.5 * thermal.beta * w);
        return family.big_omega * std::pow(w, family.n) * std::exp(-w / family.omega_d) * sc * sc *
               th;
    };

    const double w_max = 40.0 * family.omega_d;
    const double panel_tol = std::min(1e-2 * rel_tol, 1e-10);

    // First panel up to the first sin^2 half-period: the integrand behaves as
    // w^{n-1} (finite beta) or w^n (beta infinite) near zero, so tanh-sinh
    // absorbs the n < 1 endpoint singularity.
    const double first = std::min(w_max, std::numbers::pi / t);
    boost::math::quadrature::tanh_sinh<double> ts;
    std::vector<double> panels;
    panels.push_back(ts.integrate(integrand, 0.0, first, panel_tol));

    if (first < w_max) {
        using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
        const double width = std::numbers::pi / t;
        double a = first;
        while (a < w_max) {
            const double b = std::min(a + width, w_max);
            // Each panel spans half a sin^2 period, so the 31-point rule is
            // already at machine precision; deep adaptive subdivision only
            // burns time chasing the relative tolerance on near-zero panels.
            panels.push_back(gk::integrate(integrand, a, b, 2, panel_tol));
            a = b;
        }
    }
    return pairwise_sum(panels);
}

double gamma_ohmic_low_temp(const OhmicFamily& family, double t) {
    family.validate();
    if (family.n != 1.0)
        throw UnsupportedFamilyError("gamma_ohmic_low_temp: closed form requires n == 1");
    if (t < 0.0) throw std::invalid_argument("gamma_ohmic_low_temp: t must be >= 0");
    const double u = family.omega_d * t;
    return 0.25 * family.big_omega * std::log1p(u * u);
}

double suppression_factor(double b, double lambda1, double lambda2, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("suppression_factor: gamma must be >= 0");
    if (lambda1 == lambda2 || b == 0.0) return 1.0;
    const double d = lambda1 - lambda2;
    return std::exp(-2.0 * b * b * d * d * gamma);
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Quiet: return "quiet";
        case Regime::Quantum: return "quantum";
        case Regime::Thermal: return "thermal";
        case Regime::Crossover: return "crossover";
    }
    return "?";
}

Regime classify_regime(double t, const OhmicFamily& family, const ThermalParams& thermal) {
    family.validate();
    thermal.validate();
    if (!(t > 0.0)) throw std::invalid_argument("classify_regime: t must be > 0");
    if (t < 0.1 / family.omega_d) return Regime::Quiet;
    if (!thermal.is_infinite() && t > 10.0 * thermal.beta) return Regime::Thermal;
    if (t > 10.0 / family.omega_d && t < 0.1 * thermal.beta) return Regime::Quantum;
    return Regime::Crossover;
}

double fit_thermal_exponent(const OhmicFamily& family, const ThermalParams& thermal,
                            std::span<const double> t_grid, double rel_tol) {
    family.validate();
    thermal.validate();
    if (!(family.n > 0.0 && family.n < 2.0))
        throw std::domain_error("fit_thermal_exponent: requires 0 < n < 2");
    if (t_grid.size() < 2)
        throw std::invalid_argument("fit_thermal_exponent: need at least two grid points");
    for (double t : t_grid) {
        if (classify_regime(t, family, thermal) != Regime::Thermal)
            throw std::invalid_argument("fit_thermal_exponent: t grid must lie in the thermal regime");
    }

    std::vector<double> lx(t_grid.size()), ly(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        lx[i] = std::log(t_grid[i]);
        ly[i] = std::log(gamma_continuum(family, t_grid[i], thermal, rel_tol));
    }
    const double n = static_cast<double>(t_grid.size());
    const double mx = pairwise_sum(lx) / n;
    const double my = pairwise_sum(ly) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    return sxy / sxx;
}

DecoherenceCurve decoherence_curve(const ModeEnsemble& bath, const ThermalParams& thermal,
                                   std::span<const double> lambdas, double b,
                                   std::span<const double> times, double rel_tol) {
    if (times.empty()) throw std::invalid_argument("decoherence_curve: time grid must be nonempty");
    DecoherenceCurve curve;
    curve.times.assign(times.begin(), times.end());
    for (std::size_t a = 0; a < lambdas.size(); ++a)
        for (std::size_t c = a + 1; c < lambdas.size(); ++c)
            curve.pairs.emplace_back(static_cast<int>(a), static_cast<int>(c));

    curve.gamma.reserve(times.size());
    curve.suppression.reserve(times.size());
    for (double t : times) {
        const double g = bath.family() ? gamma_continuum(*bath.family(), t, thermal, rel_tol)
                                       : gamma_discrete(bath.modes(), t, thermal);
        curve.gamma.push_back(g);
        std::vector<double> supp;
        supp.reserve(curve.pairs.size());
        for (auto [i, j] : curve.pairs)
            supp.push_back(suppression_factor(b, lambdas[static_cast<std::size_t>(i)],
                                              lambdas[static_cast<std::size_t>(j)], g));
        curve.suppression.push_back(std::move(supp));
    }
    return curve;
}

}  // namespace qmeas
