#pragma once

#include <cstdint>
#include <utility>

#include "rwords/prob_model.hpp"
#include "rwords/rational.hpp"

namespace rwords {

/// Large-N mean: N p_1 + sum_{j>1} p_j / (p_1 - p_j), exact rational.
/// Requires a strictly maximal leading probability; throws
/// DegenerateLeaderError when p_1 = p_2 (the sum has a pole).
Rat mean_asymptotic(const ProbModel& model, long N);

/// Large-N variance: N p_1 (1 - p_1), exact rational; the O(1)
/// correction is not known in closed form. Same leader requirement.
Rat variance_asymptotic(const ProbModel& model, long N);

/// The mean formula is proved for all-distinct probabilities and only
/// expected to hold when ties occur below the leader; callers surface
/// the distinction.
enum class MeanRegime { Proved, Conjectured };
MeanRegime mean_regime(const ProbModel& model);

/// Normalization constant of the reduced k_1-dimensional limiting
/// integral: the integral over R^{k_1} of
///   Delta(xi)^2 exp(-1/2 [sum xi_i^2 + p_1/(1-k_1 p_1) (sum xi_i)^2]),
/// in closed form (2 pi)^{k_1/2} * 1! 2! ... k_1! * sqrt(1 - k_1 p_1).
/// Throws DegenerateError when k_1 p_1 >= 1.
double limit_const(int k1, const Rat& p1);

/// Inputs for the limiting-CDF evaluations. `s` is the threshold for
/// the scaled variable (lwis - N p_1) / sqrt(N p_1).
struct LimitSpec {
    explicit LimitSpec(ProbModel m, double threshold = 0.0)
        : model(std::move(m)), s(threshold) {}

    ProbModel model;
    double s = 0.0;

    // Monte Carlo route
    long samples = 1'000'000;
    int workers = 1;

    // Reduced-quadrature route
    double tail_cut = 12.0;     ///< integrate over [-tail_cut, s] per axis
    int panel_order = 16;       ///< Gauss-Legendre order per panel
    double panel_width = 1.0;   ///< initial panel width, halved until converged
    double target_delta = 1e-9; ///< stop once a refinement moves less than this
};

/// A limiting-CDF value with its accuracy estimate (Monte Carlo
/// standard error, or the last refinement delta for quadrature).
struct LimitResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Limiting CDF by tensor Gauss-Legendre quadrature of the reduced
/// k_1-dimensional integral, normalized by limit_const. Valid whenever
/// the top tie-group does not exhaust the alphabet; throws
/// UnsupportedModelError on homogeneous models (use the MC route).
LimitResult limit_cdf_reduced(const LimitSpec& spec);

/// Limiting CDF for any model by self-normalized importance sampling:
/// standard Gaussian vectors are projected onto the hyperplane
/// sum sqrt(p_i) xi_i = 0, coordinates are sorted descending within
/// each tie-group to land in the ordered support, and the squared
/// in-group Vandermonde factors become the importance weight. Worker
/// substreams follow the documented rule Rng(seed, worker_index).
LimitResult limit_cdf_mc(const LimitSpec& spec, std::uint64_t seed);

/// Convergence probe: (exact F_N at n = ceil(N p_1 + s sqrt(N p_1)),
/// limiting CDF at s). The limit uses the reduced quadrature when the
/// model supports it and otherwise falls back to Monte Carlo with a
/// fixed internal seed of 1.
std::pair<double, double> finite_n_limit_check(const ProbModel& model, int N, double s);

} // namespace rwords
