#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmeas/spectral.hpp"
#include "qmeas/thermal.hpp"

namespace qmeas {

enum class RunKind { Decoherence, Pointer, Regimes, OracleCompare, Sweep };

// Flat key-value scenario description; grammar documented in the README.
// Parsing errors raise ConfigError; semantic precondition violations are
// reported by validate() as std::invalid_argument naming the offending key.
struct ScenarioConfig {
    RunKind kind = RunKind::Decoherence;

    std::vector<double> lambdas;
    Eigen::MatrixXcd rho;
    bool has_system = false;

    double b = 0.0;
    std::vector<Mode> bath_modes;
    std::optional<OhmicFamily> bath_family;
    int bath_k = 0;

    double p = 0.0;
    double pointer_lambda = 0.0;
    bool has_pointer_lambda = false;
    std::vector<Mode> pointer_modes;
    std::optional<OhmicFamily> pointer_family;
    int pointer_k = 0;

    ThermalParams thermal = ThermalParams::infinite();

    double t_min = 0.0;
    double t_max = 0.0;
    int t_points = 0;
    bool log_grid = false;

    std::vector<double> switchoff_taus;

    std::string sweep_axis;
    std::vector<double> sweep_values;
    std::optional<double> sweep_t_eval;
    std::vector<double> sweep_fit_t;

    long oracle_budget = 20000;
    double rel_tol = 1e-8;

    static ScenarioConfig parse(std::istream& in);
    static ScenarioConfig parse_file(const std::string& path);

    void validate() const;
    std::vector<double> time_grid() const;
    bool has_bath() const { return bath_family.has_value() || !bath_modes.empty(); }
    bool has_pointer() const { return pointer_family.has_value() || !pointer_modes.empty(); }
    ModeEnsemble bath_ensemble() const;
    ModeEnsemble pointer_ensemble() const;
    double effective_pointer_lambda() const;
};

struct RunResult {
    std::vector<std::string> files;  // paths of the CSV files written
};

// Executes the scenario and writes its CSV outputs under out_dir.
// oracle_tol is the convergence target for oracle-compare runs; threads > 1
// parallelizes sweep rows (output order is independent of scheduling).
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                       double oracle_tol = 1e-8, int threads = 1);

// Fixed 17-significant-digit formatting used for every CSV number.
std::string format_csv_value(double x);

}  // namespace qmeas
