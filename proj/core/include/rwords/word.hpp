#pragma once

#include <vector>

#include "rwords/partition.hpp"
#include "rwords/prob_model.hpp"
#include "rwords/rng.hpp"

namespace rwords {

/// A finite sequence of letters from {1..k}.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

/// Draws n i.i.d. letters by inverse CDF on the model's cumulative
/// table. Deterministic for a given rng state.
Word sample_word(const ProbModel& model, int n, Rng& rng);

/// Length of the longest weakly increasing subsequence.
/// Dynamic program over the alphabet: best[a] = longest subsequence
/// ending in letter a; appending letter a extends the best value among
/// letters <= a. O(N * k).
int lwis_length(const Word& word);

/// Shape of the insertion tableau under RSK row insertion. Its first
/// part equals lwis_length(word); the shape has at most k parts and
/// size N.
Partition rsk_shape(const Word& word);

} // namespace rwords
