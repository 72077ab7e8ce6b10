#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

namespace qmeas {

// Truncated system (x) modes Hilbert space. Subsystem 0 is the system with
// dimension system_dim; subsystem 1 + m is mode m with dimension
// cutoffs[m] + 1.
struct FockSpace {
    int system_dim = 1;
    std::vector<int> cutoffs;
    long budget = 20000;

    long mode_dim() const;
    long total_dim() const;
    std::vector<long> dims() const;  // [system_dim, N_0+1, N_1+1, ...]
    void validate() const;           // throws BudgetError when total_dim() > budget
};

// Dense Hermitian matrix over a FockSpace (or any tensor space the caller
// tracks). check() enforces the state invariants numerically.
struct DenseState {
    Eigen::MatrixXcd mat;

    void check(double trace_tol = 1e-10, double herm_tol = 1e-12, double psd_tol = 1e-10) const;
};

// Smallest cutoff whose truncated thermal tail is below tail_tol of the total
// partition function.
int suggested_thermal_cutoff(double omega, const ThermalParams& thermal, double tail_tol = 1e-12);

// Single-mode thermal state, diagonal e^{-beta omega n}/Z_N, n = 0..N. Throws
// ConvergenceError (carrying the suggested N) when the tail is too heavy for
// the requested cutoff.
DenseState thermal_mode_state(double omega, const ThermalParams& thermal, int cutoff,
                              double tail_tol = 1e-12);

// Single-mode lowering operator on a (cutoff+1)-dimensional number basis.
Eigen::MatrixXcd lowering_operator(int cutoff);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Lifts a single-mode operator to the full mode space (identity on the other
// modes; no system factor).
Eigen::MatrixXcd embed_mode_operator(const FockSpace& space, int mode_index,
                                     const Eigen::MatrixXcd& local);

// Same, lifted to the full system (x) modes space.
Eigen::MatrixXcd embed_full_operator(const FockSpace& space, int mode_index,
                                     const Eigen::MatrixXcd& local);

// H = sum_k omega_k a+a + b Lambda (x) sum_k g_k (a + a+)   (bath modes)
//   + sum_m omega_m a+a + p Lambda (x) sum_m g_m (a + a+)   (pointer modes).
// Lambda commutes with H, so H is stored as one Hermitian block per system
// eigenvalue; modes are ordered bath first, then pointer, matching
// space.cutoffs.
struct BlockHamiltonian {
    FockSpace space;
    std::vector<double> lambdas;
    std::vector<Eigen::MatrixXcd> blocks;

    Eigen::MatrixXcd dense() const;
};

BlockHamiltonian build_hamiltonian(std::span<const double> lambdas, std::span<const Mode> bath,
                                   double b, std::span<const Mode> pointer, double p,
                                   const FockSpace& space);

// rho0 (x)-product of the system state with per-mode states (bath order
// first, pointer after, matching the Hamiltonian).
DenseState product_state(const Eigen::MatrixXcd& system_rho,
                         const std::vector<DenseState>& mode_states);

// Unitary conjugation e^{-iHt} rho e^{iHt} via one Hermitian
// eigendecomposition per lambda-block; each (lambda, lambda') sector of rho
// evolves as U_l rho U_l'^+.
DenseState evolve(const DenseState& rho0, const BlockHamiltonian& h, double t);

// Generic partial trace over a tensor space with factor dimensions dims;
// keep lists the factor indices to retain, ascending.
DenseState partial_trace(const DenseState& state, std::span<const long> dims,
                         std::span<const int> keep);
DenseState partial_trace(const DenseState& state, const FockSpace& space,
                         std::span<const int> keep);

std::complex<double> expectation(const DenseState& state, const Eigen::MatrixXcd& op);

// Increases the per-mode cutoff until eval's value moves by less than
// target_tol (relative where the value is O(1) or larger) between levels.
struct CutoffResult {
    int cutoff = 0;
    double value = 0.0;
    double delta = 0.0;
    std::vector<int> schedule;
};

CutoffResult converge_cutoff(const std::function<double(int)>& eval, double target_tol,
                             int start = 8, int max_cutoff = 4096);

}  // namespace qmeas
