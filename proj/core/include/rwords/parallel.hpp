#pragma once

#include <future>
#include <thread>
#include <vector>

namespace rwords {

/// Splits [0, count) into `workers` contiguous chunks, maps each chunk
/// with `map(chunk_index, begin, end) -> Acc`, and folds the partials
/// in chunk order with `combine`. Chunk boundaries depend only on
/// (count, workers), so the result is reproducible for a fixed pair;
/// with exact arithmetic (associative, commutative) it is independent
/// of the worker count too.
template <typename Acc, typename MapFn, typename CombineFn>
Acc chunked_map_reduce(std::size_t count, int workers, Acc zero, MapFn&& map,
                       CombineFn&& combine) {
    if (workers < 1) workers = 1;
    const std::size_t w =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(workers), count));
    if (w == 1) return combine(std::move(zero), map(std::size_t{0}, std::size_t{0}, count));

    std::vector<std::future<Acc>> parts;
    parts.reserve(w);
    const std::size_t base = count / w, extra = count % w;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t end = begin + base + (i < extra ? 1 : 0);
        parts.push_back(std::async(std::launch::async,
                                   [i, begin, end, &map] { return map(i, begin, end); }));
        begin = end;
    }
    Acc acc = std::move(zero);
    for (auto& f : parts) acc = combine(std::move(acc), f.get());
    return acc;
}

inline int default_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace rwords
