#include "rwords/measure.hpp"

#include <stdexcept>

#include "rwords/parallel.hpp"

namespace rwords {

Rat prob_partition(const Partition& shape, const ProbModel& model) {
    return schur_jacobi_trudi(shape, model).value * Rat(syt_count(shape));
}

Rat cdf_exact(int n, int N, const ProbModel& model, int workers) {
    if (n < 0 || N < 0) throw std::invalid_argument("cdf_exact: negative argument");
    const auto shapes = enumerate_partitions(N, model.alphabet_size(), std::min(n, N));
    return chunked_map_reduce(
        shapes.size(), workers, Rat(0),
        [&](std::size_t, std::size_t begin, std::size_t end) {
            Rat acc(0);
            for (std::size_t i = begin; i < end; ++i) acc += prob_partition(shapes[i], model);
            return acc;
        },
        [](Rat a, const Rat& b) { return a + b; });
}

} // namespace rwords
