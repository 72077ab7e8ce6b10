#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qmeas/errors.hpp"
#include "qmeas/scenario.hpp"

namespace {

struct CommonOpts {
    std::string config;
    std::string out = ".";
    double tolerance = 1e-8;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "scenario config file")->required();
    cmd->add_option("--out", opts.out, "output directory for CSV files");
    cmd->add_option("--tolerance", opts.tolerance, "oracle convergence tolerance");
    cmd->add_option("--threads", opts.threads, "worker threads for sweep rows")
        ->check(CLI::PositiveNumber);
}

int execute(const CommonOpts& opts, std::optional<qmeas::RunKind> forced_kind) {
    try {
        qmeas::ScenarioConfig cfg = qmeas::ScenarioConfig::parse_file(opts.config);
        if (forced_kind) cfg.kind = *forced_kind;
        const qmeas::RunResult res = qmeas::run_scenario(cfg, opts.out, opts.tolerance, opts.threads);
        for (const auto& f : res.files) std::printf("wrote %s\n", f.c_str());
        return 0;
    } catch (const qmeas::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const qmeas::ConvergenceError& e) {
        std::fprintf(stderr, "convergence failure: %s (best estimate %.17g, last delta %.17g)\n",
                     e.what(), e.best_estimate, e.last_delta);
        return 4;
    } catch (const qmeas::BudgetError& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "precondition violated: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "precondition violated: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoherence and pointer-amplification scenario runner"};
    app.require_subcommand(1);

    CommonOpts run_opts, sweep_opts, oracle_opts;
    CLI::App* run = app.add_subcommand("run", "execute the run kind named in the config");
    add_common(run, run_opts);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to a CSV matrix");
    add_common(sweep, sweep_opts);
    CLI::App* oracle = app.add_subcommand("oracle-compare", "closed forms vs Fock-space oracle");
    add_common(oracle, oracle_opts);

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return execute(run_opts, std::nullopt);
    if (sweep->parsed()) return execute(sweep_opts, qmeas::RunKind::Sweep);
    return execute(oracle_opts, qmeas::RunKind::OracleCompare);
}
