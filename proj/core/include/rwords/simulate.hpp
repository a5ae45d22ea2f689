#pragma once

#include <cstdint>

#include "rwords/prob_model.hpp"

namespace rwords {

/// Empirical moments of the lwis length over repeated sampled words.
struct SimulationSummary {
    long samples = 0;
    double mean = 0.0;
    double variance = 0.0;  ///< unbiased sample variance
    double std_error = 0.0; ///< sqrt(variance / samples)
};

/// Samples `samples` words of length N and summarizes their lwis
/// lengths. Lengths are accumulated as exact integers, so for a fixed
/// (seed, workers) pair the summary is bit-identical across runs; the
/// worker substream rule is Rng(seed, chunk_index) over a contiguous
/// split of the sample range.
SimulationSummary simulate_lwis(const ProbModel& model, int N, long samples,
                                std::uint64_t seed, int workers = 1);

} // namespace rwords
