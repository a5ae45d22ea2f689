#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rwords/prob_model.hpp"

namespace rwords {

/// First cell where the three distribution routes disagreed.
struct CrosscheckMismatch {
    int model_index = 0;
    int k = 0;
    int N = 0;
    int n = 0;
    Rat word_enum;
    Rat exact;
    Rat toeplitz;
};

struct CrosscheckReport {
    long cells = 0;
    std::optional<CrosscheckMismatch> mismatch;

    bool all_equal() const { return !mismatch.has_value(); }
};

using CdfRoute = std::function<Rat(int n, int N, const ProbModel&)>;

/// Compares three F_N(n) routes on the full grid N = 0..max_N,
/// n = 0..N for every model, stopping at the first disagreement.
/// The route arguments exist so tests can substitute a corrupted
/// implementation and watch the mismatch get caught.
CrosscheckReport run_crosscheck(const std::vector<ProbModel>& models, int max_N,
                                const CdfRoute& word_enum_route, const CdfRoute& exact_route,
                                const CdfRoute& toeplitz_route);

/// Same grid over the production routes (word enumeration,
/// partition-sum, Toeplitz determinant).
CrosscheckReport run_crosscheck(const std::vector<ProbModel>& models, int max_N);

} // namespace rwords
