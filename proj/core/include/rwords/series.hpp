#pragma once

#include <vector>

#include "rwords/rational.hpp"

namespace rwords {

/// Truncated power series in one variable with exact rational
/// coefficients c_0..c_cap. All arithmetic truncates at the cap; mixing
/// different caps in one expression is a usage error and throws. The
/// ring laws (commutativity, associativity up to truncation) hold
/// exactly.
class TruncSeries {
public:
    explicit TruncSeries(int cap) : coeffs_(static_cast<std::size_t>(cap) + 1, Rat(0)) {}

    static TruncSeries constant(const Rat& value, int cap) {
        TruncSeries s(cap);
        s.coeffs_[0] = value;
        return s;
    }
    static TruncSeries one(int cap) { return constant(Rat(1), cap); }

    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int r) const { return coeffs_[static_cast<std::size_t>(r)]; }
    void set_coeff(int r, Rat value) { coeffs_[static_cast<std::size_t>(r)] = std::move(value); }

    bool is_zero() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Rat> coeffs_;
};

} // namespace rwords
