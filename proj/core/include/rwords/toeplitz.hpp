#pragma once

#include "rwords/prob_model.hpp"
#include "rwords/series.hpp"

namespace rwords {

/// Symbol f(z) = e^{t/z} * prod_{j=1..k} (1 + p_j z) on the unit
/// circle, with t kept symbolic as a truncated series variable.
/// Expanding e^{t/z} = sum_r t^r z^{-r} / r! against
/// prod(1 + p_j z) = sum_l e_l z^l gives the Fourier coefficients
///   phi_m(t) = sum_{r >= max(0, -m)} e_{m+r} t^r / r!,
/// zero identically for m > k.
class ToeplitzSymbol {
public:
    ToeplitzSymbol(const ProbModel& model, int cap);

    int cap() const { return cap_; }
    int alphabet_size() const { return static_cast<int>(elem_sym_.size()) - 1; }

    /// e_0..e_k of the letter probabilities (e_0 = 1, e_1 = 1).
    const std::vector<Rat>& elem_sym() const { return elem_sym_; }

    /// m-th Fourier coefficient phi_m as a truncated series in t.
    TruncSeries fourier_coeff(int m) const;

private:
    std::vector<Rat> elem_sym_;
    std::vector<Rat> inv_factorial_; // 1/r! for r = 0..cap
    int cap_;
};

/// det of the n x n Toeplitz matrix with entry (i, j) = phi_{i-j},
/// computed over the truncated-series ring with the Berkowitz
/// division-free algorithm (entries with zero constant term make
/// elimination-style algorithms unusable here). n = 0 yields the empty
/// determinant 1. O(n^4) ring multiplications.
TruncSeries toeplitz_det(const ToeplitzSymbol& symbol, int n);

/// F_N(n) through the generating function: with cap N,
/// G(n; t) = det T_n(f) collects Prob(lwis <= n) t^N / N!, so the
/// result is N! * [t^N] det. Must agree exactly with cdf_exact.
Rat cdf_via_toeplitz(int n, int N, const ProbModel& model);

} // namespace rwords
