#pragma once

#include <compare>
#include <vector>

#include "rwords/rational.hpp"

namespace rwords {

/// Integer partition stored as weakly decreasing positive parts
/// (trailing zeros are stripped at construction; the empty partition is
/// the default value).
class Partition {
public:
    Partition() = default;

    /// Accepts weakly decreasing nonnegative parts; throws
    /// std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; } ///< N = sum of parts
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

    /// part(i) for 1-based i, zero beyond the stored length.
    int part(int i) const {
        return i <= num_parts() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
    }

    /// Shifted strictly-decreasing sequence h_i = part(i) + k - i for
    /// i = 1..k. Requires k >= num_parts().
    std::vector<long> shifted_parts(int k) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts; gives maps a deterministic order.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n with at most max_parts parts, each part at most
/// max_part (default: no bound beyond n). Emitted in colexicographic
/// ascending order of the part vectors zero-padded to max_parts, i.e.
/// ordered by smallest part first: for n=6, max_parts=3 the order is
/// (6), (5,1), (4,2), (3,3), (4,1,1), (3,2,1), (2,2,2).
std::vector<Partition> enumerate_partitions(int n, int max_parts, int max_part = -1);

/// Number of standard Young tableaux of the given shape, computed as
/// N! * prod_{i<j}(h_i - h_j) / prod_i h_i! over the shifted parts.
Int syt_count(const Partition& shape);

} // namespace rwords
