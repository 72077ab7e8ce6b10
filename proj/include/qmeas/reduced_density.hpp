#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qmeas/pointer.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

namespace qmeas {

// Measured system: the spectrum of the pointer observable and the initial
// density matrix written in its eigenbasis.
struct SystemSpec {
    std::vector<double> lambdas;
    Eigen::MatrixXcd rho;

    // Checks pairwise-distinct eigenvalues, Hermiticity, unit trace and
    // positive semidefiniteness (within the stated tolerances).
    void validate() const;
};

// Entry (i, j) = exp[-2 b^2 (lambda_i - lambda_j)^2 gamma]; the magnitude of
// r_{ll'} is |rho_{ll'}| times this factor. Only the bath trace contributes
// to the reported suppression; the pointer-side product does not change |r|.
Eigen::MatrixXd offdiagonal_magnitudes(const SystemSpec& spec, double b, double gamma);

// The post-decoherence mixture: Born weights, the suppression matrix, and a
// pointer report conditioned on each eigenvalue.
struct MixtureReport {
    std::vector<double> weights;
    Eigen::MatrixXd suppression;
    std::vector<PointerReport> pointer_reports;
    double gamma = 0.0;
    bool decohered = false;  // max off-diagonal suppression below threshold
};

MixtureReport mixture_report(const SystemSpec& spec, double b, double p,
                             const ModeEnsemble& bath, const ModeEnsemble& pointer,
                             const ThermalParams& thermal, double t,
                             double decoherence_threshold = 1e-3, double rel_tol = 1e-8);

}  // namespace qmeas
