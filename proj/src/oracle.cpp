#include "qmeas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qmeas/errors.hpp"

namespace qmeas {

using std::complex;
using namespace std::complex_literals;

long FockSpace::mode_dim() const {
    long d = 1;
    for (int n : cutoffs) d *= (n + 1);
    return d;
}

long FockSpace::total_dim() const { return system_dim * mode_dim(); }

std::vector<long> FockSpace::dims() const {
    std::vector<long> d;
    d.push_back(system_dim);
    for (int n : cutoffs) d.push_back(n + 1);
    return d;
}

void FockSpace::validate() const {
    if (system_dim < 1) throw std::invalid_argument("FockSpace: system_dim must be >= 1");
    for (int n : cutoffs)
        if (n < 1) throw std::invalid_argument("FockSpace: cutoffs must be >= 1");
    if (total_dim() > budget)
        throw BudgetError("FockSpace: total dimension " + std::to_string(total_dim()) +
                          " exceeds budget " + std::to_string(budget));
}

void DenseState::check(double trace_tol, double herm_tol, double psd_tol) const {
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::runtime_error("DenseState: not Hermitian within tolerance");
    if (std::abs(mat.trace() - 1.0) > trace_tol)
        throw std::runtime_error("DenseState: trace deviates from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -psd_tol)
        throw std::runtime_error("DenseState: negative eigenvalue beyond tolerance");
}

int suggested_thermal_cutoff(double omega, const ThermalParams& thermal, double tail_tol) {
    thermal.validate();
    if (!(omega > 0.0)) throw std::invalid_argument("suggested_thermal_cutoff: omega must be > 0");
    if (thermal.is_infinite()) return 1;
    // Geometric tail: tail/total = e^{-beta omega (N+1)}.
    const double n = -std::log(tail_tol) / (thermal.beta * omega) - 1.0;
    return std::max(1, static_cast<int>(std::ceil(n)));
}

DenseState thermal_mode_state(double omega, const ThermalParams& thermal, int cutoff,
                              double tail_tol) {
    thermal.validate();
    if (!(omega > 0.0)) throw std::invalid_argument("thermal_mode_state: omega must be > 0");
    if (cutoff < 1) throw std::invalid_argument("thermal_mode_state: cutoff must be >= 1");

    const int dim = cutoff + 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    if (thermal.is_infinite()) {
        m(0, 0) = 1.0;
        return DenseState{std::move(m)};
    }
    const double tail = std::exp(-thermal.beta * omega * (cutoff + 1));
    if (tail >= tail_tol)
        throw ConvergenceError("thermal_mode_state: truncated tail " + std::to_string(tail) +
                                   " above tolerance; suggested cutoff " +
                                   std::to_string(suggested_thermal_cutoff(omega, thermal, tail_tol)),
                               0.0, tail, cutoff);
    double z = 0.0;
    for (int n = 0; n <= cutoff; ++n) z += std::exp(-thermal.beta * omega * n);
    for (int n = 0; n <= cutoff; ++n) m(n, n) = std::exp(-thermal.beta * omega * n) / z;
    return DenseState{std::move(m)};
}

Eigen::MatrixXcd lowering_operator(int cutoff) {
    const int dim = cutoff + 1;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd embed_mode_operator(const FockSpace& space, int mode_index,
                                     const Eigen::MatrixXcd& local) {
    if (mode_index < 0 || mode_index >= static_cast<int>(space.cutoffs.size()))
        throw std::invalid_argument("embed_mode_operator: mode index out of range");
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
    for (int m = 0; m < static_cast<int>(space.cutoffs.size()); ++m) {
        const int d = space.cutoffs[static_cast<std::size_t>(m)] + 1;
        op = (m == mode_index) ? kron(op, local)
                               : kron(op, Eigen::MatrixXcd::Identity(d, d));
    }
    return op;
}

Eigen::MatrixXcd embed_full_operator(const FockSpace& space, int mode_index,
                                     const Eigen::MatrixXcd& local) {
    return kron(Eigen::MatrixXcd::Identity(space.system_dim, space.system_dim),
                embed_mode_operator(space, mode_index, local));
}

BlockHamiltonian build_hamiltonian(std::span<const double> lambdas, std::span<const Mode> bath,
                                   double b, std::span<const Mode> pointer, double p,
                                   const FockSpace& space) {
    space.validate();
    if (static_cast<int>(lambdas.size()) != space.system_dim)
        throw std::invalid_argument("build_hamiltonian: lambdas must match system_dim");
    if (bath.size() + pointer.size() != space.cutoffs.size())
        throw std::invalid_argument("build_hamiltonian: cutoffs must cover bath + pointer modes");

    const long f = space.mode_dim();
    // Free part and per-mode coupling operators, shared across blocks.
    Eigen::MatrixXcd free_part = Eigen::MatrixXcd::Zero(f, f);
    std::vector<Eigen::MatrixXcd> couplings;  // coupling-scaled g (a + a+) per mode
    couplings.reserve(space.cutoffs.size());
    for (std::size_t m = 0; m < space.cutoffs.size(); ++m) {
        const Mode& mode = (m < bath.size()) ? bath[m] : pointer[m - bath.size()];
        const double scale = (m < bath.size()) ? b : p;
        const Eigen::MatrixXcd a = lowering_operator(space.cutoffs[m]);
        const Eigen::MatrixXcd num = a.adjoint() * a;
        free_part += mode.omega * embed_mode_operator(space, static_cast<int>(m), num);
        couplings.push_back(scale * mode.g *
                            embed_mode_operator(space, static_cast<int>(m),
                                                Eigen::MatrixXcd(a + a.adjoint())));
    }

    BlockHamiltonian h;
    h.space = space;
    h.lambdas.assign(lambdas.begin(), lambdas.end());
    h.blocks.reserve(lambdas.size());
    for (double lambda : lambdas) {
        Eigen::MatrixXcd block = free_part;
        for (const auto& c : couplings) block += lambda * c;
        h.blocks.push_back(std::move(block));
    }
    return h;
}

Eigen::MatrixXcd BlockHamiltonian::dense() const {
    const long f = space.mode_dim();
    const long d = space.total_dim();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out.block(static_cast<long>(i) * f, static_cast<long>(i) * f, f, f) = blocks[i];
    return out;
}

DenseState product_state(const Eigen::MatrixXcd& system_rho,
                         const std::vector<DenseState>& mode_states) {
    Eigen::MatrixXcd m = system_rho;
    for (const DenseState& s : mode_states) m = kron(m, s.mat);
    return DenseState{std::move(m)};
}

DenseState evolve(const DenseState& rho0, const BlockHamiltonian& h, double t) {
    const long f = h.space.mode_dim();
    const long d = h.space.total_dim();
    if (rho0.mat.rows() != d || rho0.mat.cols() != d)
        throw std::invalid_argument("evolve: state dimension mismatch");

    std::vector<Eigen::MatrixXcd> us;
    us.reserve(h.blocks.size());
    for (const auto& block : h.blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
        const Eigen::VectorXcd phases =
            (-1i * t * es.eigenvalues().cast<complex<double>>().array()).exp();
        us.push_back(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
    }

    DenseState out;
    out.mat.resize(d, d);
    for (std::size_t i = 0; i < h.blocks.size(); ++i)
        for (std::size_t j = 0; j < h.blocks.size(); ++j) {
            const long ri = static_cast<long>(i) * f;
            const long cj = static_cast<long>(j) * f;
            out.mat.block(ri, cj, f, f) = us[i] * rho0.mat.block(ri, cj, f, f) * us[j].adjoint();
        }
    return out;
}

DenseState partial_trace(const DenseState& state, std::span<const long> dims,
                         std::span<const int> keep) {
    long total = 1;
    for (long d : dims) total *= d;
    if (state.mat.rows() != total || state.mat.cols() != total)
        throw std::invalid_argument("partial_trace: state does not match dims");
    for (std::size_t i = 0; i + 1 < keep.size(); ++i)
        if (keep[i] >= keep[i + 1])
            throw std::invalid_argument("partial_trace: keep must be ascending");
    for (int k : keep)
        if (k < 0 || k >= static_cast<int>(dims.size()))
            throw std::invalid_argument("partial_trace: keep index out of range");

    // Row index = sum_s digit_s * stride_s, last factor fastest.
    std::vector<long> strides(dims.size());
    long acc = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
        strides[s] = acc;
        acc *= dims[s];
    }

    std::vector<int> traced;
    for (int s = 0; s < static_cast<int>(dims.size()); ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

    long kept_dim = 1, traced_dim = 1;
    for (int s : keep) kept_dim *= dims[static_cast<std::size_t>(s)];
    for (int s : traced) traced_dim *= dims[static_cast<std::size_t>(s)];

    // Flat offsets into the full index for every kept / traced multi-index.
    auto offsets = [&](const std::vector<int>& subs) {
        long n = 1;
        for (int s : subs) n *= dims[static_cast<std::size_t>(s)];
        std::vector<long> off(static_cast<std::size_t>(n), 0);
        for (long x = 0; x < n; ++x) {
            long rem = x, o = 0;
            for (std::size_t s = subs.size(); s-- > 0;) {
                const long d = dims[static_cast<std::size_t>(subs[s])];
                o += (rem % d) * strides[static_cast<std::size_t>(subs[s])];
                rem /= d;
            }
            off[static_cast<std::size_t>(x)] = o;
        }
        return off;
    };
    const std::vector<long> off_keep = offsets(std::vector<int>(keep.begin(), keep.end()));
    const std::vector<long> off_traced = offsets(traced);

    DenseState out;
    out.mat = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
    for (long a = 0; a < kept_dim; ++a)
        for (long c = 0; c < kept_dim; ++c) {
            complex<double> sum = 0.0;
            for (long tdx = 0; tdx < traced_dim; ++tdx)
                sum += state.mat(off_keep[static_cast<std::size_t>(a)] +
                                     off_traced[static_cast<std::size_t>(tdx)],
                                 off_keep[static_cast<std::size_t>(c)] +
                                     off_traced[static_cast<std::size_t>(tdx)]);
            out.mat(a, c) = sum;
        }
    return out;
}

DenseState partial_trace(const DenseState& state, const FockSpace& space,
                         std::span<const int> keep) {
    const std::vector<long> dims = space.dims();
    return partial_trace(state, dims, keep);
}

std::complex<double> expectation(const DenseState& state, const Eigen::MatrixXcd& op) {
    return (state.mat * op).trace();
}

CutoffResult converge_cutoff(const std::function<double(int)>& eval, double target_tol,
                             int start, int max_cutoff) {
    if (start < 1) throw std::invalid_argument("converge_cutoff: start must be >= 1");
    if (max_cutoff < start)
        throw std::invalid_argument("converge_cutoff: max_cutoff must be >= start");

    CutoffResult res;
    int n = start;
    res.schedule.push_back(n);
    double prev = eval(n);
    while (true) {
        const int next = std::max(n + 4, n + n / 2);
        if (next > max_cutoff)
            throw ConvergenceError("converge_cutoff: budget exhausted before convergence", prev,
                                   res.delta, n);
        const double v = eval(next);
        res.schedule.push_back(next);
        res.delta = std::abs(v - prev);
        const double scale = std::max(1.0, std::abs(v));
        if (res.delta <= target_tol * scale) {
            res.cutoff = next;
            res.value = v;
            return res;
        }
        prev = v;
        n = next;
    }
}

}  // namespace qmeas
