#pragma once

#include <vector>

#include "rwords/rational.hpp"

namespace rwords {

/// A maximal run of letters sharing the same probability. Letters are
/// 1-based and runs are consecutive because the model stores
/// probabilities in descending order.
struct LetterGroup {
    int first = 0; ///< smallest letter in the group
    int last = 0;  ///< largest letter in the group (the paper's i_alpha)

    int size() const { return last - first + 1; }
};

/// Validated letter-probability model over the alphabet {1..k}.
///
/// Probabilities are exact rationals, sorted descending at construction
/// (stable, so tied letters keep their input order). The permutation
/// back to the caller's ordering is retained. Equal probabilities are
/// grouped into consecutive blocks; block data drives both the
/// tie-modified Schur evaluation and the limiting distribution.
class ProbModel {
public:
    /// Validates and normalizes raw probabilities.
    /// Throws OutOfRangeError if any entry is outside (0, 1] and
    /// SumNotOneError if the entries do not sum to exactly 1.
    static ProbModel from_rationals(const std::vector<Rat>& raw);

    /// Convenience: parses a comma-separated list such as "5/7,2/7".
    static ProbModel parse(const std::string& spec);

    int alphabet_size() const { return static_cast<int>(probs_.size()); }

    /// Probabilities in descending order; index i holds p_{i+1}.
    const std::vector<Rat>& probs() const { return probs_; }
    const Rat& prob(int letter) const { return probs_[letter - 1]; }

    const std::vector<LetterGroup>& groups() const { return groups_; }
    int num_groups() const { return static_cast<int>(groups_.size()); }

    /// 0-based index of the group containing the 1-based letter.
    int group_of(int letter) const { return group_of_[letter - 1]; }

    /// p_alpha for the 0-based group index.
    const Rat& group_prob(int group) const { return probs_[groups_[group].first - 1]; }

    /// user_order()[i] is the 0-based position of sorted letter i+1 in
    /// the caller's original vector.
    const std::vector<int>& user_order() const { return user_order_; }

    bool homogeneous() const { return groups_.size() == 1; }
    bool all_distinct() const { return groups_.size() == probs_.size(); }

    /// Strictly-descending cumulative probabilities as doubles, used by
    /// inverse-CDF sampling. Converted from the exact values once, here.
    const std::vector<double>& cumulative() const { return cumulative_; }

private:
    ProbModel() = default;

    std::vector<Rat> probs_;
    std::vector<LetterGroup> groups_;
    std::vector<int> group_of_;
    std::vector<int> user_order_;
    std::vector<double> cumulative_;
};

} // namespace rwords
