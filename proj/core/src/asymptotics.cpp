#include "rwords/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "rwords/errors.hpp"
#include "rwords/measure.hpp"
#include "rwords/parallel.hpp"
#include "rwords/quadrature.hpp"
#include "rwords/rng.hpp"

namespace rwords {

namespace {

void require_strict_leader(const ProbModel& model) {
    if (model.alphabet_size() >= 2 && model.probs()[0] == model.probs()[1])
        throw DegenerateLeaderError("p_1 = p_2: asymptotic formula has a pole");
}

} // namespace

Rat mean_asymptotic(const ProbModel& model, long N) {
    require_strict_leader(model);
    const Rat& p1 = model.probs()[0];
    Rat mean = Rat(N) * p1;
    for (int j = 2; j <= model.alphabet_size(); ++j) {
        const Rat& pj = model.probs()[static_cast<std::size_t>(j) - 1];
        mean += pj / (p1 - pj);
    }
    return mean;
}

Rat variance_asymptotic(const ProbModel& model, long N) {
    require_strict_leader(model);
    const Rat& p1 = model.probs()[0];
    return Rat(N) * p1 * (1 - p1);
}

MeanRegime mean_regime(const ProbModel& model) {
    return model.all_distinct() ? MeanRegime::Proved : MeanRegime::Conjectured;
}

double limit_const(int k1, const Rat& p1) {
    if (k1 < 1) throw DegenerateError("k_1 must be positive");
    const Rat slack = 1 - Rat(k1) * p1;
    if (sgn(slack) <= 0)
        throw DegenerateError("k_1 p_1 >= 1: top group exhausts the probability");
    double c = std::pow(2.0 * M_PI, 0.5 * k1) * std::sqrt(slack.get_d());
    for (int j = 1; j <= k1; ++j) c *= factorial(static_cast<unsigned long>(j)).get_d();
    return c;
}

namespace {

// Tensor quadrature of Delta(xi)^2 exp(-1/2 [sum xi^2 + gamma (sum xi)^2])
// over box^dim using one shared 1-D rule. The per-node Gaussian factor
// is folded into the weights so only the coupling term needs exp().
double tensor_box_integral(const QuadRule& rule, int dim, double gamma) {
    const std::size_t n = rule.size();
    std::vector<double> wg(n);
    for (std::size_t i = 0; i < n; ++i)
        wg[i] = rule.weights[i] * std::exp(-0.5 * rule.nodes[i] * rule.nodes[i]);

    std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
    double total = 0.0;
    while (true) {
        double w = 1.0, sum = 0.0, vand2 = 1.0;
        for (int d = 0; d < dim; ++d) {
            const double x = rule.nodes[idx[static_cast<std::size_t>(d)]];
            w *= wg[idx[static_cast<std::size_t>(d)]];
            sum += x;
            for (int e = d + 1; e < dim; ++e) {
                const double diff = x - rule.nodes[idx[static_cast<std::size_t>(e)]];
                vand2 *= diff * diff;
            }
        }
        total += w * vand2 * std::exp(-0.5 * gamma * sum * sum);
        int d = dim - 1;
        while (d >= 0 && ++idx[static_cast<std::size_t>(d)] == n) {
            idx[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }
    return total;
}

} // namespace

LimitResult limit_cdf_reduced(const LimitSpec& spec) {
    const ProbModel& model = spec.model;
    const int k1 = model.groups().front().size();
    if (k1 == model.alphabet_size())
        throw UnsupportedModelError(
            "all probabilities equal: the reduced integral does not apply, use limit_cdf_mc");
    const Rat& p1 = model.probs()[0];
    const double c = limit_const(k1, p1);
    const Rat gamma_exact = p1 / (1 - Rat(k1) * p1);
    const double gamma = gamma_exact.get_d();

    const double lo = -spec.tail_cut;
    if (spec.s <= lo) return {0.0, 0.0};

    const double span = spec.s - lo;
    int panels = std::max(1, static_cast<int>(std::ceil(span / spec.panel_width)));
    double prev = tensor_box_integral(composite_gauss_legendre(lo, spec.s, panels, spec.panel_order),
                                      k1, gamma) /
                  c;
    double delta = 0.0;
    for (int refine = 0; refine < 6; ++refine) {
        panels *= 2;
        const double cur =
            tensor_box_integral(composite_gauss_legendre(lo, spec.s, panels, spec.panel_order),
                                k1, gamma) /
            c;
        delta = std::abs(cur - prev);
        prev = cur;
        if (delta < spec.target_delta) break;
    }
    return {std::clamp(prev, 0.0, 1.0), delta};
}

LimitResult limit_cdf_mc(const LimitSpec& spec, std::uint64_t seed) {
    const ProbModel& model = spec.model;
    const int k = model.alphabet_size();
    std::vector<double> u(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] =
        std::sqrt(model.probs()[static_cast<std::size_t>(i)].get_d());

    struct Sums {
        double w = 0.0, wf = 0.0, w2 = 0.0, w2f = 0.0;
        Sums operator+(const Sums& o) const { return {w + o.w, wf + o.wf, w2 + o.w2, w2f + o.w2f}; }
    };

    const auto& groups = model.groups();
    const long total = std::max<long>(spec.samples, 1);
    const Sums sums = chunked_map_reduce(
        static_cast<std::size_t>(total), spec.workers, Sums{},
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            Rng rng(seed, static_cast<std::uint64_t>(chunk));
            Sums acc;
            std::vector<double> xi(static_cast<std::size_t>(k));
            for (std::size_t i = begin; i < end; ++i) {
                double dot = 0.0;
                for (int j = 0; j < k; ++j) {
                    xi[static_cast<std::size_t>(j)] = rng.gaussian();
                    dot += u[static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j)];
                }
                for (int j = 0; j < k; ++j)
                    xi[static_cast<std::size_t>(j)] -= dot * u[static_cast<std::size_t>(j)];
                double w = 1.0;
                for (const auto& g : groups) {
                    std::sort(xi.begin() + g.first - 1, xi.begin() + g.last,
                              std::greater<double>());
                    for (int a = g.first; a <= g.last; ++a)
                        for (int b = a + 1; b <= g.last; ++b) {
                            const double diff = xi[static_cast<std::size_t>(a) - 1] -
                                                xi[static_cast<std::size_t>(b) - 1];
                            w *= diff * diff;
                        }
                }
                const double f = xi[0] <= spec.s ? 1.0 : 0.0;
                acc.w += w;
                acc.wf += w * f;
                acc.w2 += w * w;
                acc.w2f += w * w * f;
            }
            return acc;
        },
        [](Sums a, const Sums& b) { return a + b; });

    if (sums.w <= 0.0) return {0.0, 1.0};
    const double mu = sums.wf / sums.w;
    const double var_num = std::max(0.0, sums.w2f * (1.0 - 2.0 * mu) + mu * mu * sums.w2);
    return {mu, std::sqrt(var_num) / sums.w};
}

std::pair<double, double> finite_n_limit_check(const ProbModel& model, int N, double s) {
    const double np1 = N * model.probs()[0].get_d();
    const double raw = std::ceil(np1 + s * std::sqrt(np1));
    const int n = static_cast<int>(std::clamp(raw, 0.0, static_cast<double>(N)));
    const double exact = cdf_exact(n, N, model).get_d();

    LimitSpec spec(model, s);
    double limit;
    if (model.homogeneous())
        limit = limit_cdf_mc(spec, 1).value;
    else
        limit = limit_cdf_reduced(spec).value;
    return {exact, limit};
}

} // namespace rwords
