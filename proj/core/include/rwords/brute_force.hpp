#pragma once

#include <map>
#include <vector>

#include "rwords/partition.hpp"
#include "rwords/prob_model.hpp"

namespace rwords {

/// Exact distribution of the lwis length over all k^N words of length
/// N, each weighted by the product of its letter probabilities.
/// Index l of the result holds Prob(lwis length == l). Exhaustive, so
/// only sensible for small k^N; this is the independent route the
/// partition and Toeplitz computations are checked against.
std::vector<Rat> word_length_distribution(const ProbModel& model, int N);

/// Prob(lwis length <= n) by full word enumeration.
Rat cdf_word_enumeration(int n, int N, const ProbModel& model);

/// Exact distribution of the RSK shape over all k^N words.
std::map<Partition, Rat> shape_distribution(const ProbModel& model, int N);

} // namespace rwords
