#include "rwords/toeplitz.hpp"

#include <stdexcept>

#include "rwords/schur.hpp"

namespace rwords {

ToeplitzSymbol::ToeplitzSymbol(const ProbModel& model, int cap)
    : elem_sym_(elementary_symmetric(model.probs())), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("negative series cap");
    inv_factorial_.reserve(static_cast<std::size_t>(cap) + 1);
    Rat inv(1);
    inv_factorial_.push_back(inv);
    for (int r = 1; r <= cap; ++r) {
        inv /= r;
        inv_factorial_.push_back(inv);
    }
}

TruncSeries ToeplitzSymbol::fourier_coeff(int m) const {
    TruncSeries phi(cap_);
    const int k = alphabet_size();
    const int r_lo = std::max(0, -m);
    const int r_hi = std::min(cap_, k - m); // e_{m+r} vanishes past e_k
    for (int r = r_lo; r <= r_hi; ++r)
        phi.set_coeff(r, elem_sym_[static_cast<std::size_t>(m + r)] *
                             inv_factorial_[static_cast<std::size_t>(r)]);
    return phi;
}

namespace {

// Berkowitz: grows the characteristic polynomial of the leading
// principal r x r submatrix one row/column at a time. c holds the
// coefficients of det(xI - A_r), leading coefficient first; after the
// last step det(A) = (-1)^n c[n].
TruncSeries berkowitz_det(const std::vector<std::vector<TruncSeries>>& a, int cap) {
    const std::size_t n = a.size();
    std::vector<TruncSeries> c{TruncSeries::one(cap)};
    for (std::size_t r = 1; r <= n; ++r) {
        // Toeplitz column t_0..t_r for this growth step:
        // t_0 = 1, t_1 = -a[r-1][r-1], t_i = -(row * A_{r-1}^{i-2} * col).
        std::vector<TruncSeries> t;
        t.reserve(r + 1);
        t.push_back(TruncSeries::one(cap));
        t.push_back(-a[r - 1][r - 1]);
        if (r >= 2) {
            std::vector<TruncSeries> v; // A_{r-1}^{i-2} * col, iterated
            v.reserve(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i) v.push_back(a[i][r - 1]);
            for (std::size_t step = 2; step <= r; ++step) {
                TruncSeries dot(cap);
                for (std::size_t j = 0; j < r - 1; ++j) dot += a[r - 1][j] * v[j];
                t.push_back(-dot);
                if (step == r) break;
                std::vector<TruncSeries> next(r - 1, TruncSeries(cap));
                for (std::size_t i = 0; i < r - 1; ++i)
                    for (std::size_t j = 0; j < r - 1; ++j) next[i] += a[i][j] * v[j];
                v = std::move(next);
            }
        }
        std::vector<TruncSeries> grown(r + 1, TruncSeries(cap));
        for (std::size_t j = 0; j <= r; ++j)
            for (std::size_t i = 0; i <= j && i < t.size(); ++i)
                if (j - i < c.size()) grown[j] += t[i] * c[j - i];
        c = std::move(grown);
    }
    TruncSeries det = c[n];
    return (n % 2 == 1) ? -det : det;
}

} // namespace

TruncSeries toeplitz_det(const ToeplitzSymbol& symbol, int n) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
    if (n == 0) return TruncSeries::one(symbol.cap());
    std::vector<std::vector<TruncSeries>> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<TruncSeries> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row.push_back(symbol.fourier_coeff(i - j));
        a.push_back(std::move(row));
    }
    return berkowitz_det(a, symbol.cap());
}

Rat cdf_via_toeplitz(int n, int N, const ProbModel& model) {
    if (n < 0 || N < 0) throw std::invalid_argument("cdf_via_toeplitz: negative argument");
    ToeplitzSymbol symbol(model, N);
    const TruncSeries g = toeplitz_det(symbol, n);
    return g.coeff(N) * Rat(factorial(static_cast<unsigned long>(N)));
}

} // namespace rwords
