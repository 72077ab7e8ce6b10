#include "qmeas/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmeas/decoherence.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/oracle.hpp"
#include "qmeas/pointer.hpp"
#include "qmeas/reduced_density.hpp"

namespace qmeas {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& tok) {
    if (tok == "inf" || tok == "infinite") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse number '" + tok + "'");
    }
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

std::vector<double> parse_numbers(const std::string& key, const std::string& val) {
    std::vector<double> out;
    for (const auto& t : split_tokens(val)) out.push_back(parse_number(key, t));
    return out;
}

// "omega:g omega:g ..." pairs.
std::vector<Mode> parse_modes(const std::string& key, const std::string& val) {
    std::vector<Mode> modes;
    for (const auto& t : split_tokens(val)) {
        const auto colon = t.find(':');
        if (colon == std::string::npos)
            throw ConfigError("config: key '" + key + "': expected omega:g pair, got '" + t + "'");
        modes.push_back(Mode{parse_number(key, t.substr(0, colon)),
                             parse_number(key, t.substr(colon + 1))});
    }
    return modes;
}

OhmicFamily parse_family(const std::string& key, const std::string& val) {
    const auto nums = parse_numbers(key, val);
    if (nums.size() != 3)
        throw ConfigError("config: key '" + key + "': expected 'Omega n omega_d'");
    return OhmicFamily{nums[0], nums[1], nums[2]};
}

const std::map<std::string, RunKind> kKinds = {
    {"decoherence", RunKind::Decoherence}, {"pointer", RunKind::Pointer},
    {"regimes", RunKind::Regimes},         {"oracle-compare", RunKind::OracleCompare},
    {"sweep", RunKind::Sweep},
};

}  // namespace

ScenarioConfig ScenarioConfig::parse(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: line " + std::to_string(lineno) + ": empty key");
        if (!kv.emplace(key, val).second)
            throw ConfigError("config: duplicate key '" + key + "'");
    }

    ScenarioConfig cfg;
    for (const auto& [key, val] : kv) {
        if (key == "run.kind") {
            const auto it = kKinds.find(val);
            if (it == kKinds.end()) throw ConfigError("config: unknown run.kind '" + val + "'");
            cfg.kind = it->second;
        } else if (key == "system.lambdas") {
            cfg.lambdas = parse_numbers(key, val);
            cfg.has_system = true;
        } else if (key == "system.rho") {
            const auto nums = parse_numbers(key, val);
            const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(nums.size()))));
            if (d * d != static_cast<Eigen::Index>(nums.size()))
                throw ConfigError("config: system.rho must be a square row-major matrix");
            cfg.rho.resize(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j)
                    cfg.rho(i, j) = nums[static_cast<std::size_t>(i * d + j)];
        } else if (key == "bath.b") {
            cfg.b = parse_number(key, val);
        } else if (key == "bath.modes") {
            cfg.bath_modes = parse_modes(key, val);
        } else if (key == "bath.family") {
            cfg.bath_family = parse_family(key, val);
        } else if (key == "bath.k") {
            cfg.bath_k = static_cast<int>(parse_number(key, val));
        } else if (key == "pointer.p") {
            cfg.p = parse_number(key, val);
        } else if (key == "pointer.lambda") {
            cfg.pointer_lambda = parse_number(key, val);
            cfg.has_pointer_lambda = true;
        } else if (key == "pointer.modes") {
            cfg.pointer_modes = parse_modes(key, val);
        } else if (key == "pointer.family") {
            cfg.pointer_family = parse_family(key, val);
        } else if (key == "pointer.k") {
            cfg.pointer_k = static_cast<int>(parse_number(key, val));
        } else if (key == "thermal.beta") {
            cfg.thermal.beta = parse_number(key, val);
        } else if (key == "grid.t_min") {
            cfg.t_min = parse_number(key, val);
        } else if (key == "grid.t_max") {
            cfg.t_max = parse_number(key, val);
        } else if (key == "grid.points") {
            cfg.t_points = static_cast<int>(parse_number(key, val));
        } else if (key == "grid.scale") {
            if (val == "linear") cfg.log_grid = false;
            else if (val == "log") cfg.log_grid = true;
            else throw ConfigError("config: grid.scale must be 'linear' or 'log'");
        } else if (key == "switchoff.tau") {
            cfg.switchoff_taus = parse_numbers(key, val);
        } else if (key == "sweep.axis") {
            cfg.sweep_axis = val;
        } else if (key == "sweep.values") {
            cfg.sweep_values = parse_numbers(key, val);
        } else if (key == "sweep.t_eval") {
            cfg.sweep_t_eval = parse_number(key, val);
        } else if (key == "sweep.fit_t") {
            cfg.sweep_fit_t = parse_numbers(key, val);
        } else if (key == "oracle.budget") {
            cfg.oracle_budget = static_cast<long>(parse_number(key, val));
        } else if (key == "quadrature.rel_tol") {
            cfg.rel_tol = parse_number(key, val);
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse(in);
}

std::vector<double> ScenarioConfig::time_grid() const {
    if (t_points <= 0) throw std::invalid_argument("grid.points: time grid must be nonempty");
    std::vector<double> ts(static_cast<std::size_t>(t_points));
    if (t_points == 1) {
        ts[0] = t_min;
        return ts;
    }
    if (log_grid) {
        if (!(t_min > 0.0)) throw std::invalid_argument("grid.t_min: log grid requires t_min > 0");
        const double la = std::log(t_min), lb = std::log(t_max);
        for (int i = 0; i < t_points; ++i)
            ts[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (t_points - 1));
    } else {
        for (int i = 0; i < t_points; ++i)
            ts[static_cast<std::size_t>(i)] = t_min + (t_max - t_min) * i / (t_points - 1);
    }
    return ts;
}

ModeEnsemble ScenarioConfig::bath_ensemble() const {
    if (bath_family) return ModeEnsemble::from_family(*bath_family, bath_k);
    return ModeEnsemble::from_modes(bath_modes);
}

ModeEnsemble ScenarioConfig::pointer_ensemble() const {
    if (pointer_family) return ModeEnsemble::from_family(*pointer_family, pointer_k);
    return ModeEnsemble::from_modes(pointer_modes);
}

double ScenarioConfig::effective_pointer_lambda() const {
    if (has_pointer_lambda) return pointer_lambda;
    if (has_system && !lambdas.empty()) return lambdas.front();
    throw std::invalid_argument("pointer.lambda: conditioning eigenvalue required");
}

void ScenarioConfig::validate() const {
    thermal.validate();
    if (has_system) {
        SystemSpec spec{lambdas, rho};
        spec.validate();
    }
    if (bath_family) bath_family->validate();
    if (!bath_modes.empty()) validate_modes(bath_modes);
    if (pointer_family) pointer_family->validate();
    if (!pointer_modes.empty()) validate_modes(pointer_modes);
    if (bath_family && !bath_modes.empty())
        throw std::invalid_argument("bath: give either bath.modes or bath.family, not both");
    if (pointer_family && !pointer_modes.empty())
        throw std::invalid_argument("pointer: give either pointer.modes or pointer.family, not both");

    switch (kind) {
        case RunKind::Decoherence:
            if (!has_system) throw std::invalid_argument("system.lambdas: required for decoherence runs");
            if (!has_bath()) throw std::invalid_argument("bath: required for decoherence runs");
            if (bath_family && bath_k < 1)
                throw std::invalid_argument("bath.k: discretization count must be >= 1");
            time_grid();
            break;
        case RunKind::Pointer:
            if (!has_pointer()) throw std::invalid_argument("pointer: modes required for pointer runs");
            if (pointer_family && pointer_k < 1)
                throw std::invalid_argument("pointer.k: discretization count must be >= 1");
            effective_pointer_lambda();
            time_grid();
            for (double tau : switchoff_taus)
                if (tau < 0.0) throw std::invalid_argument("switchoff.tau: must be >= 0");
            break;
        case RunKind::Regimes:
            if (!bath_family) throw std::invalid_argument("bath.family: required for regimes runs");
            time_grid();
            break;
        case RunKind::OracleCompare:
            if (!has_system) throw std::invalid_argument("system.lambdas: required for oracle-compare");
            if (bath_modes.empty())
                throw std::invalid_argument("bath.modes: oracle-compare needs explicit bath modes");
            if (bath_modes.size() > 3)
                throw std::invalid_argument("bath.modes: oracle supports at most 3 bath modes");
            if (!pointer_modes.empty() && pointer_modes.size() > 3)
                throw std::invalid_argument("pointer.modes: oracle supports at most 3 pointer modes");
            if (lambdas.size() < 2)
                throw std::invalid_argument("system.lambdas: oracle-compare needs >= 2 eigenvalues");
            time_grid();
            break;
        case RunKind::Sweep: {
            static const std::vector<std::string> axes = {"b", "p", "beta", "n", "omega_d", "t"};
            if (std::find(axes.begin(), axes.end(), sweep_axis) == axes.end())
                throw std::invalid_argument("sweep.axis: must be one of b, p, beta, n, omega_d, t");
            if (sweep_values.empty()) throw std::invalid_argument("sweep.values: must be nonempty");
            if (!has_bath()) throw std::invalid_argument("bath: required for sweep runs");
            if ((sweep_axis == "n" || sweep_axis == "omega_d") && !bath_family)
                throw std::invalid_argument("bath.family: required to sweep n or omega_d");
            if (has_pointer() && pointer_family && pointer_k < 1)
                throw std::invalid_argument("pointer.k: discretization count must be >= 1");
            if (sweep_axis != "t" && !sweep_t_eval && t_points <= 0)
                throw std::invalid_argument("sweep.t_eval: evaluation time required (or a grid)");
            break;
        }
    }
}

std::string format_csv_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

namespace fs = std::filesystem;

std::string write_csv(const std::string& out_dir, const std::string& name,
                      const std::string& header, const std::vector<std::string>& rows) {
    fs::create_directories(out_dir);
    const std::string path = (fs::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << header << "\n";
    for (const auto& r : rows) out << r << "\n";
    return path;
}

std::string run_decoherence(const ScenarioConfig& cfg, const std::string& out_dir) {
    const ModeEnsemble bath = cfg.bath_ensemble();
    const std::vector<double> ts = cfg.time_grid();
    const DecoherenceCurve curve =
        decoherence_curve(bath, cfg.thermal, cfg.lambdas, cfg.b, ts, cfg.rel_tol);

    std::string header = "t,gamma";
    for (auto [i, j] : curve.pairs)
        header += ",supp_" + std::to_string(i) + "_" + std::to_string(j);
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < curve.times.size(); ++r) {
        std::string row = format_csv_value(curve.times[r]) + "," + format_csv_value(curve.gamma[r]);
        for (double s : curve.suppression[r]) row += "," + format_csv_value(s);
        rows.push_back(std::move(row));
    }
    return write_csv(out_dir, "decoherence.csv", header, rows);
}

std::string run_pointer(const ScenarioConfig& cfg, const std::string& out_dir) {
    const ModeEnsemble pointer = cfg.pointer_ensemble();
    const PointerCoupling c{cfg.p, cfg.effective_pointer_lambda()};
    const std::vector<double> ts = cfg.time_grid();

    std::string header = "t,delta_e,x";
    for (double tau : cfg.switchoff_taus) header += ",x_after_" + format_csv_value(tau);
    std::vector<std::string> rows;
    for (double t : ts) {
        std::string row = format_csv_value(t);
        row += "," + format_csv_value(pointer_energy_change_discrete(pointer.modes(), c, t));
        row += "," + format_csv_value(pointer_x_change_discrete(pointer.modes(), c, t));
        for (double tau : cfg.switchoff_taus)
            row += "," + format_csv_value(pointer_x_after_switchoff(pointer.modes(), c, t, tau));
        rows.push_back(std::move(row));
    }
    return write_csv(out_dir, "pointer.csv", header, rows);
}

std::string run_regimes(const ScenarioConfig& cfg, const std::string& out_dir) {
    const std::vector<double> ts = cfg.time_grid();
    std::vector<std::string> rows;
    for (double t : ts) {
        const Regime r = classify_regime(t, *cfg.bath_family, cfg.thermal);
        const double g = gamma_continuum(*cfg.bath_family, t, cfg.thermal, cfg.rel_tol);
        rows.push_back(format_csv_value(t) + "," + to_string(r) + "," + format_csv_value(g));
    }
    return write_csv(out_dir, "regimes.csv", "t,regime_label,gamma", rows);
}

std::string run_oracle_compare(const ScenarioConfig& cfg, const std::string& out_dir,
                               double oracle_tol) {
    std::vector<std::string> rows;
    auto emit = [&rows](const std::string& name, double closed, double oracle) {
        rows.push_back(name + "," + format_csv_value(closed) + "," + format_csv_value(oracle) +
                       "," + format_csv_value(std::abs(closed - oracle)));
    };

    const std::vector<double> ts = cfg.time_grid();

    // Thermal-state energy of the first bath mode: the closed form is the
    // Bose-Einstein mean energy, which the thermal trace arbitrates.
    if (!cfg.thermal.is_infinite()) {
        const Mode& m0 = cfg.bath_modes.front();
        const int n = std::max(8, suggested_thermal_cutoff(m0.omega, cfg.thermal, 1e-14));
        const DenseState theta = thermal_mode_state(m0.omega, cfg.thermal, n, 1e-12);
        const Eigen::MatrixXcd a = lowering_operator(n);
        const double oracle_e =
            m0.omega * expectation(theta, Eigen::MatrixXcd(a.adjoint() * a)).real();
        emit("thermal_energy_bath0",
             thermal_energy_bose_einstein(std::span<const Mode>(&m0, 1), cfg.thermal), oracle_e);
    }

    // |r_01| suppression ratio: full system + bath evolution vs the discrete
    // closed form.
    const double dl = cfg.lambdas[1] - cfg.lambdas[0];
    if (std::abs(cfg.rho(0, 1)) > 0.0) {
        for (double t : ts) {
            const double closed =
                std::exp(-2.0 * cfg.b * cfg.b * dl * dl *
                         gamma_discrete(cfg.bath_modes, t, cfg.thermal));
            auto eval = [&](int n) {
                FockSpace space{static_cast<int>(cfg.lambdas.size()),
                                std::vector<int>(cfg.bath_modes.size(), n), cfg.oracle_budget};
                space.validate();
                const BlockHamiltonian h =
                    build_hamiltonian(cfg.lambdas, cfg.bath_modes, cfg.b, {}, 0.0, space);
                std::vector<DenseState> thetas;
                for (const Mode& m : cfg.bath_modes)
                    thetas.push_back(thermal_mode_state(m.omega, cfg.thermal, n, 1.0));
                const DenseState rho0 = product_state(cfg.rho, thetas);
                const DenseState rt = evolve(rho0, h, t);
                const std::vector<int> keep = {0};
                const DenseState r = partial_trace(rt, space, keep);
                return std::abs(r.mat(0, 1)) / std::abs(cfg.rho(0, 1));
            };
            const CutoffResult res = converge_cutoff(eval, oracle_tol);
            emit("r01_ratio@t=" + format_csv_value(t), closed, res.value);
        }
    }

    // Pointer observables, conditioned on a single eigenvalue.
    if (!cfg.pointer_modes.empty()) {
        const double lambda = cfg.effective_pointer_lambda();
        const PointerCoupling c{cfg.p, lambda};
        const std::vector<double> one_lambda = {lambda};
        for (double t : ts) {
            auto oracle_quantity = [&](int n, int which) {
                FockSpace space{1, std::vector<int>(cfg.pointer_modes.size(), n),
                                cfg.oracle_budget};
                space.validate();
                const BlockHamiltonian h =
                    build_hamiltonian(one_lambda, {}, 0.0, cfg.pointer_modes, cfg.p, space);
                std::vector<DenseState> sigmas;
                for (const Mode& m : cfg.pointer_modes)
                    sigmas.push_back(thermal_mode_state(m.omega, cfg.thermal, n, 1.0));
                const DenseState rho0 =
                    product_state(Eigen::MatrixXcd::Identity(1, 1), sigmas);
                const DenseState rt = evolve(rho0, h, t);
                const long f = space.mode_dim();
                Eigen::MatrixXcd energy = Eigen::MatrixXcd::Zero(f, f);
                Eigen::MatrixXcd x_op = Eigen::MatrixXcd::Zero(f, f);
                for (std::size_t m = 0; m < cfg.pointer_modes.size(); ++m) {
                    const Eigen::MatrixXcd a = lowering_operator(n);
                    energy += cfg.pointer_modes[m].omega *
                              embed_mode_operator(space, static_cast<int>(m),
                                                  Eigen::MatrixXcd(a.adjoint() * a));
                    x_op += cfg.pointer_modes[m].g *
                            embed_mode_operator(space, static_cast<int>(m),
                                                Eigen::MatrixXcd(a + a.adjoint()));
                }
                const Eigen::MatrixXcd a0 =
                    embed_mode_operator(space, 0, lowering_operator(n));
                switch (which) {
                    case 0:
                        return expectation(rt, energy).real() -
                               expectation(rho0, energy).real();
                    case 1: return expectation(rt, x_op).real();
                    case 2: return expectation(rt, a0).real();
                    default: return expectation(rt, a0).imag();
                }
            };
            const double closed_de = pointer_energy_change_discrete(cfg.pointer_modes, c, t);
            const double closed_x = pointer_x_change_discrete(cfg.pointer_modes, c, t);
            const std::complex<double> alpha =
                switchoff_amplitude(cfg.pointer_modes.front(), c, t);
            emit("delta_e@t=" + format_csv_value(t), closed_de,
                 converge_cutoff([&](int n) { return oracle_quantity(n, 0); }, oracle_tol).value);
            emit("x@t=" + format_csv_value(t), closed_x,
                 converge_cutoff([&](int n) { return oracle_quantity(n, 1); }, oracle_tol).value);
            emit("alpha0_re@t=" + format_csv_value(t), alpha.real(),
                 converge_cutoff([&](int n) { return oracle_quantity(n, 2); }, oracle_tol).value);
            emit("alpha0_im@t=" + format_csv_value(t), alpha.imag(),
                 converge_cutoff([&](int n) { return oracle_quantity(n, 3); }, oracle_tol).value);
        }
    }

    return write_csv(out_dir, "oracle_compare.csv", "quantity,closed_form,oracle,abs_err", rows);
}

std::string run_sweep(const ScenarioConfig& cfg, const std::string& out_dir, int threads) {
    const double t_eval = cfg.sweep_t_eval ? *cfg.sweep_t_eval : cfg.t_max;
    if (!(t_eval >= 0.0)) throw std::invalid_argument("sweep.t_eval: must be >= 0");

    std::vector<std::pair<int, int>> pairs;
    if (cfg.has_system)
        for (std::size_t i = 0; i < cfg.lambdas.size(); ++i)
            for (std::size_t j = i + 1; j < cfg.lambdas.size(); ++j)
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::string header = cfg.sweep_axis + ",gamma";
    for (auto [i, j] : pairs) header += ",supp_" + std::to_string(i) + "_" + std::to_string(j);
    const bool with_pointer = cfg.has_pointer();
    if (with_pointer) header += ",delta_e,x";
    const bool with_fit = (cfg.sweep_axis == "n") && !cfg.sweep_fit_t.empty();
    if (with_fit) header += ",thermal_exponent";

    auto compute_row = [&](double value) {
        ScenarioConfig c = cfg;
        double t = t_eval;
        if (cfg.sweep_axis == "b") c.b = value;
        else if (cfg.sweep_axis == "p") c.p = value;
        else if (cfg.sweep_axis == "beta") c.thermal.beta = value;
        else if (cfg.sweep_axis == "t") t = value;
        else if (cfg.sweep_axis == "n") {
            c.bath_family->n = value;
            if (c.pointer_family) c.pointer_family->n = value;
        } else if (cfg.sweep_axis == "omega_d") {
            c.bath_family->omega_d = value;
            if (c.pointer_family) c.pointer_family->omega_d = value;
        }

        const double g = c.bath_family
                             ? gamma_continuum(*c.bath_family, t, c.thermal, c.rel_tol)
                             : gamma_discrete(c.bath_modes, t, c.thermal);
        std::string row = format_csv_value(value) + "," + format_csv_value(g);
        for (auto [i, j] : pairs)
            row += "," + format_csv_value(suppression_factor(
                             c.b, c.lambdas[static_cast<std::size_t>(i)],
                             c.lambdas[static_cast<std::size_t>(j)], g));
        if (with_pointer) {
            const ModeEnsemble pm = c.pointer_ensemble();
            const PointerCoupling pc{c.p, c.effective_pointer_lambda()};
            row += "," + format_csv_value(pointer_energy_change_discrete(pm.modes(), pc, t));
            row += "," + format_csv_value(pointer_x_change_discrete(pm.modes(), pc, t));
        }
        if (with_fit)
            row += "," + format_csv_value(
                             fit_thermal_exponent(*c.bath_family, c.thermal, c.sweep_fit_t, c.rel_tol));
        return row;
    };

    std::vector<std::string> rows(cfg.sweep_values.size());
    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(rows.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = compute_row(cfg.sweep_values[i]);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(w); i < rows.size();
                         i += static_cast<std::size_t>(nthreads))
                        rows[i] = compute_row(cfg.sweep_values[i]);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }
    return write_csv(out_dir, "sweep.csv", header, rows);
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir, double oracle_tol,
                       int threads) {
    cfg.validate();
    RunResult res;
    switch (cfg.kind) {
        case RunKind::Decoherence: res.files.push_back(run_decoherence(cfg, out_dir)); break;
        case RunKind::Pointer: res.files.push_back(run_pointer(cfg, out_dir)); break;
        case RunKind::Regimes: res.files.push_back(run_regimes(cfg, out_dir)); break;
        case RunKind::OracleCompare:
            res.files.push_back(run_oracle_compare(cfg, out_dir, oracle_tol));
            break;
        case RunKind::Sweep: res.files.push_back(run_sweep(cfg, out_dir, threads)); break;
    }
    return res;
}

}  // namespace qmeas
