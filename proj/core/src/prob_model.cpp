#include "rwords/prob_model.hpp"

#include <algorithm>
#include <numeric>

#include "rwords/errors.hpp"

namespace rwords {

ProbModel ProbModel::from_rationals(const std::vector<Rat>& raw) {
    if (raw.empty()) throw OutOfRangeError("probability vector is empty");
    Rat sum(0);
    for (const Rat& p : raw) {
        if (sgn(p) <= 0 || p > 1)
            throw OutOfRangeError("probability " + fraction_string(p) + " outside (0, 1]");
        sum += p;
    }
    if (sum != 1)
        throw SumNotOneError("probabilities sum to " + fraction_string(sum) + ", not 1");

    const int k = static_cast<int>(raw.size());
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return raw[a] > raw[b]; });

    ProbModel m;
    m.user_order_ = order;
    m.probs_.reserve(raw.size());
    for (int idx : order) m.probs_.push_back(raw[idx]);

    m.group_of_.resize(raw.size());
    for (int i = 0; i < k;) {
        int j = i;
        while (j + 1 < k && m.probs_[j + 1] == m.probs_[i]) ++j;
        for (int l = i; l <= j; ++l) m.group_of_[l] = static_cast<int>(m.groups_.size());
        m.groups_.push_back(LetterGroup{i + 1, j + 1});
        i = j + 1;
    }

    Rat acc(0);
    m.cumulative_.reserve(raw.size());
    for (const Rat& p : m.probs_) {
        acc += p;
        m.cumulative_.push_back(acc.get_d());
    }
    m.cumulative_.back() = 1.0; // exact sum renders as 1.0 regardless of rounding
    return m;
}

ProbModel ProbModel::parse(const std::string& spec) {
    return from_rationals(parse_rational_list(spec));
}

} // namespace rwords
