#include <doctest.h>

#include <cmath>
#include <vector>

#include "qmeas/decoherence.hpp"
#include "qmeas/numerics.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

using namespace qmeas;

TEST_CASE("spectral_weight point values") {
    const OhmicFamily ohmic{1.0, 1.0, 1.0};
    CHECK(spectral_weight(ohmic, 0.0) == 0.0);
    CHECK(spectral_weight(ohmic, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    const OhmicFamily steep{2.0, 3.0, 5.0};
    CHECK(spectral_weight(steep, 2.0) ==
          doctest::Approx(2.0 * 8.0 * std::exp(-0.4)).epsilon(1e-14));
}

TEST_CASE("spectral_weight rejects negative frequency") {
    const OhmicFamily ohmic{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(spectral_weight(ohmic, -0.1), std::domain_error);
}

TEST_CASE("OhmicFamily validation and decoherence flag") {
    CHECK_THROWS_AS((OhmicFamily{0.0, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((OhmicFamily{1.0, -1.0, 1.0}.validate()), std::invalid_argument);
    CHECK(OhmicFamily{1.0, 1.0, 1.0}.fully_decohering());
    CHECK_FALSE(OhmicFamily{1.0, 3.0, 1.0}.fully_decohering());
}

TEST_CASE("discretize preserves total spectral mass") {
    for (double n : {1.0, 2.0, 3.0}) {
        const OhmicFamily fam{1.3, n, 0.7};
        const auto modes = discretize(fam, 200);
        std::vector<double> g2(modes.size());
        for (std::size_t i = 0; i < modes.size(); ++i) g2[i] = modes[i].g * modes[i].g;
        const double mass = pairwise_sum(g2);
        CHECK(mass == doctest::Approx(integrated_spectral_weight(fam)).epsilon(1e-6));
    }
}

TEST_CASE("one-point discretization carries its quadrature mass at the node") {
    const OhmicFamily fam{1.0, 1.0, 1.0};
    const double omega_max = 40.0;
    const auto modes = discretize(fam, 1);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].omega == doctest::Approx(0.5 * omega_max).epsilon(1e-14));
    CHECK(modes[0].g * modes[0].g ==
          doctest::Approx(spectral_weight(fam, modes[0].omega) * omega_max).epsilon(1e-13));
}

TEST_CASE("discrete gamma converges to the continuum") {
    const OhmicFamily fam{1.0, 1.0, 1.0};
    const ThermalParams th{1e6};
    const double t = 1.0;
    const double cont = gamma_continuum(fam, t, th);

    const double g200 = gamma_discrete(discretize(fam, 200), t, th);
    const double g400 = gamma_discrete(discretize(fam, 400), t, th);
    CHECK(std::abs(g200 - cont) / cont < 1e-3);
    CHECK(std::abs(g400 - g200) / g200 < 1e-4);
}

TEST_CASE("doubling the mode count never worsens the gamma error") {
    const OhmicFamily fam{1.0, 1.0, 1.0};
    const ThermalParams th{1e6};
    for (double t : {0.1, 1.0, 10.0}) {
        const double cont = gamma_continuum(fam, t, th);
        double prev_err = std::numeric_limits<double>::infinity();
        for (int k : {50, 100, 200, 400}) {
            const double err = std::abs(gamma_discrete(discretize(fam, k), t, th) - cont) / cont;
            CHECK(err <= prev_err + 1e-12);
            prev_err = err;
        }
    }
}

TEST_CASE("gauss_legendre integrates low-order polynomials exactly") {
    const GaussLegendre q = gauss_legendre(5);
    double s0 = 0.0, s2 = 0.0;
    for (int i = 0; i < 5; ++i) {
        s0 += q.weights[i];
        s2 += q.weights[i] * q.nodes[i] * q.nodes[i];
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("ModeEnsemble validation") {
    CHECK_THROWS_AS(ModeEnsemble::from_modes({}), std::invalid_argument);
    CHECK_THROWS_AS(ModeEnsemble::from_modes({Mode{-1.0, 1.0}}), std::invalid_argument);
    const auto e = ModeEnsemble::from_family(OhmicFamily{1.0, 1.0, 1.0}, 16);
    CHECK(e.modes().size() == 16);
    CHECK(e.family().has_value());
}
