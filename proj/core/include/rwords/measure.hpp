#pragma once

#include "rwords/partition.hpp"
#include "rwords/prob_model.hpp"
#include "rwords/schur.hpp"

namespace rwords {

/// Probability of drawing a word whose RSK shape is `shape`:
/// Prob(lambda) = s_lambda(p) * f^lambda, exact.
Rat prob_partition(const Partition& shape, const ProbModel& model);

/// Exact distribution function F_N(n) = Prob(lwis length <= n), by
/// direct summation of prob_partition over partitions of N with at
/// most k parts and first part <= n. Partition terms may be summed by
/// several workers; exact rational addition makes the result
/// independent of the split.
Rat cdf_exact(int n, int N, const ProbModel& model, int workers = 1);

} // namespace rwords
