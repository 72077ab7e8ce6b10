#include "qmeas/reduced_density.hpp"

#include <cmath>
#include <stdexcept>

#include "qmeas/decoherence.hpp"

namespace qmeas {

void SystemSpec::validate() const {
    if (lambdas.empty()) throw std::invalid_argument("SystemSpec: spectrum must be nonempty");
    const auto d = static_cast<Eigen::Index>(lambdas.size());
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("SystemSpec: rho dimension must match the spectrum");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw std::invalid_argument("SystemSpec: eigenvalues must be pairwise distinct");

    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("SystemSpec: rho must be Hermitian");
    if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("SystemSpec: rho must have unit trace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12)
        throw std::invalid_argument("SystemSpec: rho must be positive semidefinite");
}

Eigen::MatrixXd offdiagonal_magnitudes(const SystemSpec& spec, double b, double gamma) {
    spec.validate();
    if (gamma < 0.0) throw std::invalid_argument("offdiagonal_magnitudes: gamma must be >= 0");
    const auto d = static_cast<Eigen::Index>(spec.lambdas.size());
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            m(i, j) = suppression_factor(b, spec.lambdas[static_cast<std::size_t>(i)],
                                         spec.lambdas[static_cast<std::size_t>(j)], gamma);
    return m;
}

MixtureReport mixture_report(const SystemSpec& spec, double b, double p,
                             const ModeEnsemble& bath, const ModeEnsemble& pointer,
                             const ThermalParams& thermal, double t,
                             double decoherence_threshold, double rel_tol) {
    spec.validate();
    thermal.validate();
    if (t < 0.0) throw std::invalid_argument("mixture_report: t must be >= 0");

    MixtureReport rep;
    rep.gamma = bath.family() ? gamma_continuum(*bath.family(), t, thermal, rel_tol)
                              : gamma_discrete(bath.modes(), t, thermal);
    rep.suppression = offdiagonal_magnitudes(spec, b, rep.gamma);

    // Diagonal weights are the initial Born weights; the adiabatic coupling
    // never changes them.
    rep.weights.resize(spec.lambdas.size());
    for (std::size_t i = 0; i < spec.lambdas.size(); ++i)
        rep.weights[i] = spec.rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();

    rep.pointer_reports.reserve(spec.lambdas.size());
    for (double lambda : spec.lambdas)
        rep.pointer_reports.push_back(
            pointer_report(pointer.modes(), PointerCoupling{p, lambda}, thermal, t));

    double max_offdiag = 0.0;
    const auto d = rep.suppression.rows();
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if (i != j) max_offdiag = std::max(max_offdiag, rep.suppression(i, j));
    rep.decohered = (d <= 1) || (max_offdiag < decoherence_threshold);
    return rep;
}

}  // namespace qmeas
