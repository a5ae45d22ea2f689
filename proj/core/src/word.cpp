#include "rwords/word.hpp"

#include <algorithm>

namespace rwords {

Word sample_word(const ProbModel& model, int n, Rng& rng) {
    const auto& cum = model.cumulative();
    Word w;
    w.letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const int letter = static_cast<int>(it - cum.begin()) + 1;
        w.letters.push_back(std::min(letter, model.alphabet_size()));
    }
    return w;
}

int lwis_length(const Word& word) {
    int k = 0;
    for (int a : word.letters) k = std::max(k, a);
    std::vector<int> best(static_cast<std::size_t>(k) + 1, 0);
    for (int a : word.letters) {
        int prefix = 0;
        for (int c = 0; c <= a; ++c) prefix = std::max(prefix, best[c]);
        best[a] = prefix + 1;
    }
    int out = 0;
    for (int v : best) out = std::max(out, v);
    return out;
}

Partition rsk_shape(const Word& word) {
    std::vector<std::vector<int>> rows;
    for (int x : word.letters) {
        int carry = x;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            std::swap(carry, *it); // bump into the next row
        }
        if (!placed) rows.push_back({carry});
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

} // namespace rwords
