#include "qmeas/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmeas {

namespace {

double pairwise_sum_impl(const double* xs, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_sum_impl(xs.data(), xs.size());
}

double coth(double x) {
    if (x > 20.0) return 1.0;
    if (x < 1e-5) return 1.0 / x + x / 3.0;
    return 1.0 / std::tanh(x);
}

GaussLegendre gauss_legendre(int k) {
    if (k < 1) throw std::invalid_argument("gauss_legendre: k must be >= 1");
    GaussLegendre q;
    q.nodes.resize(k);
    q.weights.resize(k);
    for (int i = 0; i < k; ++i) {
        // Standard asymptotic initial guess for the i-th root (descending).
        double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= k; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = k * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[k - 1 - i] = x;
        q.weights[k - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

}  // namespace qmeas
