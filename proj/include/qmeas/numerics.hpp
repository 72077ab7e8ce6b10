#pragma once

#include <span>
#include <vector>

namespace qmeas {

// Fixed-tree (pairwise) summation. Deterministic for a fixed input order,
// which keeps sweep output bit-reproducible regardless of how terms were
// produced.
double pairwise_sum(std::span<const double> xs);

// coth(x) for x > 0, stable near zero and saturating to 1 for large x.
double coth(double x);

// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int k);

}  // namespace qmeas
