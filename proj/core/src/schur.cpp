#include "rwords/schur.hpp"

#include <stdexcept>
#include <utility>

namespace rwords {

std::vector<Rat> complete_homogeneous(const std::vector<Rat>& p, int max_degree) {
    std::vector<Rat> h(static_cast<std::size_t>(max_degree) + 1, Rat(0));
    h[0] = 1;
    for (const Rat& pi : p)
        for (int d = 1; d <= max_degree; ++d)
            h[static_cast<std::size_t>(d)] += h[static_cast<std::size_t>(d) - 1] * pi;
    return h;
}

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& p) {
    std::vector<Rat> e(p.size() + 1, Rat(0));
    e[0] = 1;
    std::size_t used = 0;
    for (const Rat& pi : p) {
        ++used;
        for (std::size_t l = used; l >= 1; --l) e[l] += e[l - 1] * pi;
    }
    return e;
}

Rat rational_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c] * inv;
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

SchurEval schur_jacobi_trudi(const Partition& shape, const ProbModel& model) {
    if (shape.num_parts() > model.alphabet_size())
        throw std::invalid_argument("partition has more parts than letters");
    const int r = shape.num_parts();
    if (r == 0) return {Rat(1), SchurMethod::JacobiTrudi};
    const int max_degree = shape.first_part() + r;
    const auto h = complete_homogeneous(model.probs(), max_degree);
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(r),
                                    std::vector<Rat>(static_cast<std::size_t>(r)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            const int d = shape.part(i) - i + j;
            m[i - 1][j - 1] = d < 0 ? Rat(0) : h[static_cast<std::size_t>(d)];
        }
    return {rational_det(std::move(m)), SchurMethod::JacobiTrudi};
}

SchurEval schur_bialternant(const Partition& shape, const ProbModel& model) {
    const int k = model.alphabet_size();
    if (shape.num_parts() > k)
        throw std::invalid_argument("partition has more parts than letters");
    const auto h = shape.shifted_parts(k);
    const auto& p = model.probs();

    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(k),
                                    std::vector<Rat>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i) {
        const int derivs = model.groups()[model.group_of(i)].last - i; // i_alpha - i
        for (int j = 1; j <= k; ++j) {
            const long hj = h[static_cast<std::size_t>(j) - 1];
            Rat& cell = m[i - 1][j - 1];
            if (derivs == 0) {
                cell = rat_pow(p[i - 1], hj);
            } else if (hj == 0) {
                cell = 0;
            } else {
                cell = Rat(int_pow(Int(hj), static_cast<unsigned long>(derivs))) *
                       rat_pow(p[i - 1], hj - derivs);
            }
        }
    }
    Rat numerator = rational_det(std::move(m));

    Rat denom(1);
    for (const auto& g : model.groups())
        for (int d = 1; d < g.size(); ++d) denom *= Rat(factorial(static_cast<unsigned long>(d)));
    const int ng = model.num_groups();
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b) {
            const Rat diff = model.group_prob(a) - model.group_prob(b);
            const long e = static_cast<long>(model.groups()[a].size()) *
                           static_cast<long>(model.groups()[b].size());
            denom *= rat_pow(diff, e);
        }
    return {numerator / denom, SchurMethod::Bialternant};
}

} // namespace rwords
