#include "rwords/brute_force.hpp"

#include <functional>

#include "rwords/word.hpp"

namespace rwords {

namespace {

// Odometer over all k^N words; calls visit(word, weight).
void for_each_word(const ProbModel& model, int N,
                   const std::function<void(const Word&, const Rat&)>& visit) {
    const int k = model.alphabet_size();
    Word w;
    w.letters.assign(static_cast<std::size_t>(N), 1);
    std::vector<Rat> weight_prefix(static_cast<std::size_t>(N) + 1, Rat(1));
    for (int i = 0; i < N; ++i) weight_prefix[i + 1] = weight_prefix[i] * model.prob(1);

    while (true) {
        visit(w, weight_prefix[static_cast<std::size_t>(N)]);
        int pos = N - 1;
        while (pos >= 0 && w.letters[static_cast<std::size_t>(pos)] == k) --pos;
        if (pos < 0) break;
        ++w.letters[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < N; ++i) w.letters[static_cast<std::size_t>(i)] = 1;
        for (int i = pos; i < N; ++i)
            weight_prefix[i + 1] =
                weight_prefix[i] * model.prob(w.letters[static_cast<std::size_t>(i)]);
    }
}

} // namespace

std::vector<Rat> word_length_distribution(const ProbModel& model, int N) {
    std::vector<Rat> hist(static_cast<std::size_t>(N) + 1, Rat(0));
    for_each_word(model, N, [&](const Word& w, const Rat& weight) {
        hist[static_cast<std::size_t>(lwis_length(w))] += weight;
    });
    return hist;
}

Rat cdf_word_enumeration(int n, int N, const ProbModel& model) {
    const auto hist = word_length_distribution(model, N);
    Rat acc(0);
    for (int l = 0; l <= std::min(n, N); ++l) acc += hist[static_cast<std::size_t>(l)];
    return acc;
}

std::map<Partition, Rat> shape_distribution(const ProbModel& model, int N) {
    std::map<Partition, Rat> hist;
    for_each_word(model, N, [&](const Word& w, const Rat& weight) {
        hist[rsk_shape(w)] += weight;
    });
    return hist;
}

} // namespace rwords
