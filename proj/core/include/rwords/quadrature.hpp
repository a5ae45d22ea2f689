#pragma once

#include <vector>

namespace rwords {

/// Nodes and weights of a 1-D quadrature rule on some interval.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule of the given order on [-1, 1]; nodes by Newton
/// iteration on the Legendre recurrence.
QuadRule gauss_legendre(int order);

/// Composite rule: `panels` equal panels covering [a, b], each carrying
/// a Gauss-Legendre rule of the given order.
QuadRule composite_gauss_legendre(double a, double b, int panels, int order);

} // namespace rwords
