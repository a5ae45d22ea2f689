#include "rwords/series.hpp"

#include <stdexcept>

namespace rwords {

namespace {
void check_caps(const TruncSeries& a, const TruncSeries& b) {
    if (a.cap() != b.cap()) throw std::invalid_argument("TruncSeries cap mismatch");
}
} // namespace

bool TruncSeries::is_zero() const {
    for (const Rat& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out(cap());
    for (std::size_t r = 0; r < coeffs_.size(); ++r) out.coeffs_[r] = -coeffs_[r];
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    check_caps(*this, other);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += other.coeffs_[r];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    check_caps(*this, other);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= other.coeffs_[r];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_caps(a, b);
    const int cap = a.cap();
    TruncSeries out(cap);
    for (int i = 0; i <= cap; ++i) {
        if (sgn(a.coeff(i)) == 0) continue;
        for (int j = 0; i + j <= cap; ++j) {
            if (sgn(b.coeff(j)) == 0) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

} // namespace rwords
