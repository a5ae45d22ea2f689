#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rwords {

/// Deterministic random stream used everywhere randomness is needed.
///
/// The generator is std::mt19937_64 (fully specified by the standard),
/// seeded through std::seed_seq from (seed) or (seed, stream). Parallel
/// code derives worker substreams with the documented rule
/// `Rng(seed, worker_index)`. uniform() maps the top 53 bits of one
/// draw to [0, 1); gaussian() is Box-Muller and consumes exactly two
/// uniforms per call. Identical (seed, stream) therefore reproduces an
/// identical sequence on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rwords
