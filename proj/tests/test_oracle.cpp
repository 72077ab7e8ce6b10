#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qmeas/decoherence.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/oracle.hpp"
#include "qmeas/pointer.hpp"

using namespace qmeas;
using std::numbers::pi;

TEST_CASE("FockSpace dimensions and budget") {
    FockSpace space{2, {3, 4}};
    CHECK(space.mode_dim() == 20);
    CHECK(space.total_dim() == 40);
    CHECK_NOTHROW(space.validate());

    FockSpace huge{4, {99, 99}};
    CHECK_THROWS_AS(huge.validate(), BudgetError);
    CHECK_THROWS_AS((FockSpace{0, {2}}.validate()), std::invalid_argument);
}

TEST_CASE("thermal mode state") {
    SUBCASE("zero temperature is the ground projector") {
        const DenseState s = thermal_mode_state(1.0, ThermalParams::infinite(), 4);
        CHECK(s.mat(0, 0) == std::complex<double>(1.0, 0.0));
        CHECK(std::abs(s.mat.trace() - 1.0) < 1e-14);
    }
    SUBCASE("mean occupation at beta omega = ln 2") {
        const DenseState s = thermal_mode_state(1.0, ThermalParams{std::log(2.0)}, 60);
        const Eigen::MatrixXcd a = lowering_operator(60);
        const double n = expectation(s, Eigen::MatrixXcd(a.adjoint() * a)).real();
        CHECK(std::abs(n - 1.0) < 1e-9);
    }
    SUBCASE("energy at beta omega = 1 arbitrates the initial-energy formula") {
        const Mode m{1.0, 0.0};
        const DenseState s = thermal_mode_state(1.0, ThermalParams{1.0}, 60);
        const Eigen::MatrixXcd a = lowering_operator(60);
        const double e = expectation(s, Eigen::MatrixXcd(a.adjoint() * a)).real();
        CHECK(std::abs(e - 1.0 / (std::exp(1.0) - 1.0)) < 1e-9);
        // The Bose-Einstein form matches the trace; the squared-denominator
        // variant does not.
        const std::vector<Mode> one = {Mode{1.0, 1.0}};
        CHECK(std::abs(thermal_energy_bose_einstein(one, ThermalParams{1.0}) - e) < 1e-9);
        CHECK(std::abs(thermal_energy_squared_denominator(one, ThermalParams{1.0}) - e) > 0.1);
    }
    SUBCASE("insufficient cutoff reports a suggestion") {
        try {
            thermal_mode_state(1.0, ThermalParams{0.1}, 4);
            FAIL("expected ConvergenceError");
        } catch (const ConvergenceError& e) {
            CHECK(e.last_cutoff == 4);
            CHECK(suggested_thermal_cutoff(1.0, ThermalParams{0.1}) > 4);
        }
    }
}

TEST_CASE("build_hamiltonian structure") {
    SUBCASE("decoupled modes stack free oscillator energies") {
        const std::vector<double> lambdas = {0.0, 1.0};
        const std::vector<Mode> bath = {Mode{1.0, 0.4}};
        const std::vector<Mode> pointer = {Mode{2.0, 0.3}};
        FockSpace space{2, {3, 3}};
        const BlockHamiltonian h = build_hamiltonian(lambdas, bath, 0.0, pointer, 0.0, space);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.blocks[0], Eigen::EigenvaluesOnly);
        // Eigenvalues are n1 * 1 + n2 * 2 over the cutoffs.
        CHECK(std::abs(es.eigenvalues().minCoeff()) < 1e-12);
        CHECK(std::abs(es.eigenvalues().maxCoeff() - (3.0 + 6.0)) < 1e-10);
        // The full matrix is Hermitian and block-diagonal.
        const Eigen::MatrixXcd full = h.dense();
        CHECK((full - full.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("lambda = 0 decouples regardless of b and p") {
        const std::vector<double> lambdas = {0.0};
        const std::vector<Mode> bath = {Mode{1.0, 0.4}};
        FockSpace space{1, {3}};
        const BlockHamiltonian on = build_hamiltonian(lambdas, bath, 5.0, {}, 0.0, space);
        const BlockHamiltonian off = build_hamiltonian(lambdas, bath, 0.0, {}, 0.0, space);
        CHECK((on.blocks[0] - off.blocks[0]).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("displaced-oscillator ground energy shift") {
        const std::vector<double> lambdas = {1.0, -1.0};
        const std::vector<Mode> bath = {Mode{1.0, 0.3}};
        const double b = 2.0;
        FockSpace space{2, {40}};
        const BlockHamiltonian h = build_hamiltonian(lambdas, bath, b, {}, 0.0, space);
        for (std::size_t i = 0; i < 2; ++i) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.blocks[i], Eigen::EigenvaluesOnly);
            const double expected = -b * b * 0.3 * 0.3 / 1.0;  // -lambda^2 b^2 g^2 / omega
            CHECK(std::abs(es.eigenvalues().minCoeff() - expected) < 1e-8);
        }
    }
}

TEST_CASE("evolution basics") {
    const std::vector<double> lambdas = {0.0, 1.0};
    const std::vector<Mode> bath = {Mode{1.0, 0.3}};
    FockSpace space{2, {12}};
    const BlockHamiltonian h = build_hamiltonian(lambdas, bath, 1.5, {}, 0.0, space);

    Eigen::MatrixXcd rho_sys(2, 2);
    rho_sys << 0.5, 0.5, 0.5, 0.5;
    const DenseState theta = thermal_mode_state(1.0, ThermalParams{2.0}, 12, 1e-9);
    const DenseState rho0 = product_state(rho_sys, {theta});

    SUBCASE("t = 0 is the identity map") {
        const DenseState r = evolve(rho0, h, 0.0);
        CHECK((r.mat - rho0.mat).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("stationary states stay put") {
        // A thermal mode state with no system coherence commutes with H.
        Eigen::MatrixXcd diag_sys = Eigen::MatrixXcd::Zero(2, 2);
        diag_sys(0, 0) = 1.0;  // lambda = 0 block: free evolution of a diagonal state
        const DenseState stat = product_state(diag_sys, {theta});
        const DenseState r = evolve(stat, h, 2.7);
        CHECK((r.mat - stat.mat).cwiseAbs().maxCoeff() < 1e-11);
    }
    SUBCASE("trace, Hermiticity and positivity survive evolution") {
        const DenseState r = evolve(rho0, h, 1.3);
        CHECK_NOTHROW(r.check());
    }
}

TEST_CASE("partial trace") {
    SUBCASE("product state factors recover") {
        Eigen::MatrixXcd rho_sys(2, 2);
        rho_sys << 0.7, 0.2, 0.2, 0.3;
        const DenseState theta = thermal_mode_state(1.0, ThermalParams{1.0}, 6, 1e-2);
        const DenseState full = product_state(rho_sys, {theta});
        FockSpace space{2, {6}};
        const std::vector<int> keep_sys = {0};
        const DenseState sys = partial_trace(full, space, keep_sys);
        CHECK((sys.mat - rho_sys).cwiseAbs().maxCoeff() < 1e-13);
        const std::vector<int> keep_mode = {1};
        const DenseState mode = partial_trace(full, space, keep_mode);
        CHECK((mode.mat - theta.mat).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("maximally entangled pure state traces to maximally mixed") {
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
        psi(0) = 1.0 / std::sqrt(2.0);
        psi(3) = 1.0 / std::sqrt(2.0);
        const DenseState bell{psi * psi.adjoint()};
        const std::vector<long> dims = {2, 2};
        const std::vector<int> keep = {0};
        const DenseState red = partial_trace(bell, dims, keep);
        CHECK((red.mat - Eigen::MatrixXcd::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-14);
    }
}

namespace {

// |r_01| suppression ratio from full system + bath evolution.
double oracle_r01_ratio(double b, const Mode& mode, const ThermalParams& th, double t, int cutoff) {
    const std::vector<double> lambdas = {0.0, 1.0};
    FockSpace space{2, {cutoff}};
    const std::vector<Mode> bath = {mode};
    const BlockHamiltonian h = build_hamiltonian(lambdas, bath, b, {}, 0.0, space);
    Eigen::MatrixXcd rho_sys(2, 2);
    rho_sys << 0.5, 0.5, 0.5, 0.5;
    const DenseState theta = thermal_mode_state(mode.omega, th, cutoff, 1.0);
    const DenseState rho0 = product_state(rho_sys, {theta});
    const DenseState rt = evolve(rho0, h, t);
    const std::vector<int> keep = {0};
    const DenseState r = partial_trace(rt, space, keep);
    return std::abs(r.mat(0, 1)) / 0.5;
}

}  // namespace

TEST_CASE("oracle reproduces the discrete decoherence factor") {
    const Mode mode{1.0, 0.3};
    const double b = 2.0;
    for (const ThermalParams th : {ThermalParams::infinite(), ThermalParams{2.0}}) {
        for (double t : {0.7, pi}) {
            const double closed = std::exp(-2.0 * b * b * gamma_discrete({&mode, 1}, t, th));
            const CutoffResult res = converge_cutoff(
                [&](int n) { return oracle_r01_ratio(b, mode, th, t, n); }, 1e-8);
            CHECK(std::abs(res.value - closed) < 1e-6);
        }
    }
}

TEST_CASE("oracle preserves the diagonal weights") {
    const Mode mode{1.0, 0.3};
    FockSpace space{2, {20}};
    const std::vector<double> lambdas = {0.0, 1.0};
    const std::vector<Mode> bath = {mode};
    const BlockHamiltonian h = build_hamiltonian(lambdas, bath, 2.0, {}, 0.0, space);
    Eigen::MatrixXcd rho_sys(2, 2);
    rho_sys << 0.3, std::sqrt(0.21), std::sqrt(0.21), 0.7;
    const DenseState rho0 =
        product_state(rho_sys, {thermal_mode_state(1.0, ThermalParams{2.0}, 20)});
    const DenseState rt = evolve(rho0, h, 1.9);
    const std::vector<int> keep = {0};
    const DenseState r = partial_trace(rt, space, keep);
    CHECK(std::abs(r.mat(0, 0).real() - 0.3) < 1e-10);
    CHECK(std::abs(r.mat(1, 1).real() - 0.7) < 1e-10);
}

namespace {

struct PointerOracle {
    Mode mode;
    PointerCoupling c;
    ThermalParams th;
    double t;

    DenseState evolved(int cutoff) const {
        const std::vector<double> lambdas = {c.lambda};
        FockSpace space{1, {cutoff}};
        const std::vector<Mode> pointer = {mode};
        const BlockHamiltonian h = build_hamiltonian(lambdas, {}, 0.0, pointer, c.p, space);
        const DenseState sigma = thermal_mode_state(mode.omega, th, cutoff, 1.0);
        const DenseState rho0 = product_state(Eigen::MatrixXcd::Identity(1, 1), {sigma});
        return evolve(rho0, h, t);
    }

    double delta_e(int cutoff) const {
        const Eigen::MatrixXcd a = lowering_operator(cutoff);
        const Eigen::MatrixXcd num = a.adjoint() * a;
        const DenseState sigma = thermal_mode_state(mode.omega, th, cutoff, 1.0);
        const DenseState rt = evolved(cutoff);
        return mode.omega * (expectation(rt, num).real() - expectation(sigma, num).real());
    }
    double x(int cutoff) const {
        const Eigen::MatrixXcd a = lowering_operator(cutoff);
        const DenseState rt = evolved(cutoff);
        return mode.g * expectation(rt, Eigen::MatrixXcd(a + a.adjoint())).real();
    }
    std::complex<double> amplitude(int cutoff) const {
        const Eigen::MatrixXcd a = lowering_operator(cutoff);
        const DenseState rt = evolved(cutoff);
        return expectation(rt, a);
    }
};

}  // namespace

TEST_CASE("oracle reproduces the pointer closed forms") {
    const PointerOracle po{Mode{1.0, 1.0}, PointerCoupling{1.0, 1.0}, ThermalParams{2.0}, 0.9};
    const std::vector<Mode> one = {po.mode};

    const CutoffResult de =
        converge_cutoff([&](int n) { return po.delta_e(n); }, 1e-8);
    CHECK(std::abs(de.value - pointer_energy_change_discrete(one, po.c, po.t)) < 1e-6);

    const CutoffResult x = converge_cutoff([&](int n) { return po.x(n); }, 1e-8);
    CHECK(std::abs(x.value - pointer_x_change_discrete(one, po.c, po.t)) < 1e-6);
}

TEST_CASE("oracle validates the switch-off amplitude") {
    const PointerOracle po{Mode{1.0, 1.0}, PointerCoupling{1.0, 1.0}, ThermalParams{2.0}, 0.9};
    const std::complex<double> predicted = switchoff_amplitude(po.mode, po.c, po.t);
    const CutoffResult re =
        converge_cutoff([&](int n) { return po.amplitude(n).real(); }, 1e-8);
    const CutoffResult im =
        converge_cutoff([&](int n) { return po.amplitude(n).imag(); }, 1e-8);
    CHECK(std::abs(re.value - predicted.real()) < 1e-6);
    CHECK(std::abs(im.value - predicted.imag()) < 1e-6);
}

TEST_CASE("converge_cutoff") {
    SUBCASE("a flat observable converges immediately") {
        const CutoffResult res = converge_cutoff([](int) { return 1.25; }, 1e-10, 2, 64);
        CHECK(res.cutoff == 6);
        CHECK(res.value == 1.25);
    }
    SUBCASE("budget exhaustion carries the best estimate") {
        try {
            converge_cutoff([](int n) { return 1.0 / n; }, 1e-14, 2, 8);
            FAIL("expected ConvergenceError");
        } catch (const ConvergenceError& e) {
            CHECK(e.best_estimate > 0.0);
            CHECK(e.last_delta > 0.0);
        }
    }
    SUBCASE("moderate displacement needs only a modest cutoff") {
        // Displacement b g / omega = 1: occupation ~ 1, so convergence well
        // below N = 50.
        const Mode mode{1.0, 0.5};
        const PointerOracle po{mode, PointerCoupling{2.0, 1.0}, ThermalParams::infinite(), 2.0};
        const CutoffResult res = converge_cutoff([&](int n) { return po.delta_e(n); }, 1e-6);
        CHECK(res.cutoff <= 50);
        const std::vector<Mode> one = {mode};
        CHECK(std::abs(res.value - pointer_energy_change_discrete(one, po.c, po.t)) < 1e-5);
    }
}
