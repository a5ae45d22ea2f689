#include "rwords/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace rwords {

QuadRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be positive");
    QuadRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    return rule;
}

QuadRule composite_gauss_legendre(double a, double b, int panels, int order) {
    if (panels < 1) throw std::invalid_argument("need at least one panel");
    const QuadRule base = gauss_legendre(order);
    QuadRule rule;
    rule.nodes.reserve(base.size() * static_cast<std::size_t>(panels));
    rule.weights.reserve(base.size() * static_cast<std::size_t>(panels));
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width, half = 0.5 * width;
        for (std::size_t i = 0; i < base.size(); ++i) {
            rule.nodes.push_back(mid + half * base.nodes[i]);
            rule.weights.push_back(half * base.weights[i]);
        }
    }
    return rule;
}

} // namespace rwords
