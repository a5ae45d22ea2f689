#include "rwords/simulate.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "rwords/parallel.hpp"
#include "rwords/rng.hpp"
#include "rwords/word.hpp"

namespace rwords {

SimulationSummary simulate_lwis(const ProbModel& model, int N, long samples,
                                std::uint64_t seed, int workers) {
    if (N < 0 || samples < 1) throw std::invalid_argument("simulate_lwis: bad arguments");

    struct Sums {
        std::int64_t sum = 0;
        std::int64_t sum_sq = 0;
        Sums operator+(const Sums& o) const { return {sum + o.sum, sum_sq + o.sum_sq}; }
    };

    const Sums sums = chunked_map_reduce(
        static_cast<std::size_t>(samples), workers, Sums{},
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            Rng rng(seed, static_cast<std::uint64_t>(chunk));
            Sums acc;
            for (std::size_t i = begin; i < end; ++i) {
                const std::int64_t l = lwis_length(sample_word(model, N, rng));
                acc.sum += l;
                acc.sum_sq += l * l;
            }
            return acc;
        },
        [](Sums a, const Sums& b) { return a + b; });

    SimulationSummary out;
    out.samples = samples;
    const double n = static_cast<double>(samples);
    out.mean = static_cast<double>(sums.sum) / n;
    if (samples > 1) {
        const double centered =
            static_cast<double>(sums.sum_sq) - n * out.mean * out.mean;
        out.variance = std::max(0.0, centered / (n - 1.0));
    }
    out.std_error = std::sqrt(out.variance / n);
    return out;
}

} // namespace rwords
