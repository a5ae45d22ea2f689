#include "rwords/crosscheck.hpp"

#include <map>

#include "rwords/brute_force.hpp"
#include "rwords/measure.hpp"
#include "rwords/toeplitz.hpp"

namespace rwords {

CrosscheckReport run_crosscheck(const std::vector<ProbModel>& models, int max_N,
                                const CdfRoute& word_enum_route, const CdfRoute& exact_route,
                                const CdfRoute& toeplitz_route) {
    CrosscheckReport report;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        const ProbModel& model = models[mi];
        for (int N = 0; N <= max_N; ++N) {
            for (int n = 0; n <= N; ++n) {
                const Rat a = word_enum_route(n, N, model);
                const Rat b = exact_route(n, N, model);
                const Rat c = toeplitz_route(n, N, model);
                ++report.cells;
                if (a != b || b != c) {
                    report.mismatch = CrosscheckMismatch{static_cast<int>(mi),
                                                         model.alphabet_size(),
                                                         N,
                                                         n,
                                                         a,
                                                         b,
                                                         c};
                    return report;
                }
            }
        }
    }
    return report;
}

CrosscheckReport run_crosscheck(const std::vector<ProbModel>& models, int max_N) {
    CrosscheckReport report;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        // Word histograms and Toeplitz determinants are shared across
        // the grid cells of one model; a determinant at cap max_N has
        // the same low-order coefficients as one at any smaller cap.
        std::map<int, std::vector<Rat>> word_hists;
        std::map<int, TruncSeries> dets;
        const ToeplitzSymbol symbol(models[mi], max_N);

        const CdfRoute word_route = [&](int n, int N, const ProbModel& m) -> Rat {
            auto it = word_hists.find(N);
            if (it == word_hists.end())
                it = word_hists.emplace(N, word_length_distribution(m, N)).first;
            Rat acc(0);
            for (int l = 0; l <= std::min(n, N); ++l)
                acc += it->second[static_cast<std::size_t>(l)];
            return acc;
        };
        const CdfRoute exact_route = [](int n, int N, const ProbModel& m) -> Rat {
            return cdf_exact(n, N, m);
        };
        // explicit Rat return: gmpxx expression templates must not
        // escape the lambda frame
        const CdfRoute toeplitz_route = [&](int n, int N, const ProbModel&) -> Rat {
            auto it = dets.find(n);
            if (it == dets.end()) it = dets.emplace(n, toeplitz_det(symbol, n)).first;
            return it->second.coeff(N) * Rat(factorial(static_cast<unsigned long>(N)));
        };

        CrosscheckReport single =
            run_crosscheck({models[mi]}, max_N, word_route, exact_route, toeplitz_route);
        report.cells += single.cells;
        if (!single.all_equal()) {
            single.mismatch->model_index = static_cast<int>(mi);
            report.mismatch = std::move(single.mismatch);
            return report;
        }
    }
    return report;
}

} // namespace rwords
