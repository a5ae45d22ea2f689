#include <doctest.h>

#include "rwords/brute_force.hpp"
#include "rwords/measure.hpp"
#include "rwords/toeplitz.hpp"

#include "test_support.hpp"

using namespace rwords;

TEST_CASE("fourier coefficients for the one-letter alphabet") {
    const auto m1 = ProbModel::parse("1");
    const ToeplitzSymbol sym(m1, 4);
    CHECK(sym.elem_sym() == std::vector<Rat>{Rat(1), Rat(1)});

    const TruncSeries phi0 = sym.fourier_coeff(0); // 1 + t
    CHECK(phi0.coeff(0) == 1);
    CHECK(phi0.coeff(1) == 1);
    CHECK(phi0.coeff(2) == 0);

    const TruncSeries phim1 = sym.fourier_coeff(-1); // t + t^2/2
    CHECK(phim1.coeff(0) == 0);
    CHECK(phim1.coeff(1) == 1);
    CHECK(phim1.coeff(2) == make_rat(1, 2));
    CHECK(phim1.coeff(3) == 0);
}

TEST_CASE("phi_0 always starts at e_0 = 1 and phi_m vanishes past m = k") {
    Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        const ProbModel m = testing::random_model(rng, 5);
        const ToeplitzSymbol sym(m, 6);
        CHECK(sym.fourier_coeff(0).coeff(0) == 1);
        CHECK(sym.fourier_coeff(-1).coeff(0) == 0);
        for (int mm = m.alphabet_size() + 1; mm <= m.alphabet_size() + 3; ++mm)
            CHECK(sym.fourier_coeff(mm).is_zero());
    }
}

TEST_CASE("small determinants against direct formulas") {
    const auto m = ProbModel::parse("1/2,5/14,1/7");
    const ToeplitzSymbol sym(m, 6);
    CHECK(toeplitz_det(sym, 1) == sym.fourier_coeff(0));
    const TruncSeries direct = sym.fourier_coeff(0) * sym.fourier_coeff(0) -
                               sym.fourier_coeff(1) * sym.fourier_coeff(-1);
    CHECK(toeplitz_det(sym, 2) == direct);
    CHECK(toeplitz_det(sym, 0) == TruncSeries::one(6));
}

TEST_CASE("generating function pins: k=1 and the homogeneous pair") {
    const auto m1 = ProbModel::parse("1");
    const TruncSeries g1 = toeplitz_det(ToeplitzSymbol(m1, 5), 1);
    CHECK(g1.coeff(0) == 1);
    CHECK(g1.coeff(1) == 1);
    for (int r = 2; r <= 5; ++r) CHECK(g1.coeff(r) == 0);

    const auto mh = ProbModel::parse("1/2,1/2");
    const TruncSeries gh = toeplitz_det(ToeplitzSymbol(mh, 2), 1);
    CHECK(gh.coeff(2) * 2 == make_rat(1, 4)); // 2! [t^2] = F_2(1)
}

TEST_CASE("empty-word coefficient of every determinant is 1") {
    const auto m = ProbModel::parse("3/8,5/16,5/16");
    const ToeplitzSymbol sym(m, 4);
    for (int n = 1; n <= 6; ++n) CHECK(toeplitz_det(sym, n).coeff(0) == 1);
}

TEST_CASE("cdf_via_toeplitz pinned values") {
    const auto mh = ProbModel::parse("1/2,1/2");
    const auto m57 = ProbModel::parse("5/7,2/7");
    CHECK(cdf_via_toeplitz(1, 2, mh) == make_rat(1, 4));
    CHECK(cdf_via_toeplitz(2, 5, m57) == cdf_exact(2, 5, m57));
    CHECK(cdf_via_toeplitz(7, 5, m57) == 1);
    CHECK(cdf_via_toeplitz(0, 0, m57) == 1);
    CHECK(cdf_via_toeplitz(0, 3, m57) == 0);
}

TEST_CASE("toeplitz route equals the partition route across the full grid") {
    // One determinant per n serves every N <= 12 at once; spot calls on
    // cdf_via_toeplitz pin the public entry point as well.
    for (const char* probs : {"1", "5/7,2/7", "1/2,5/14,1/7", "3/8,5/16,5/16"}) {
        const auto m = ProbModel::parse(probs);
        const int cap = 12;
        const ToeplitzSymbol sym(m, cap);
        Rat nfact(1);
        for (int n = 1; n <= cap; ++n) {
            const TruncSeries g = toeplitz_det(sym, n);
            nfact = 1;
            for (int N = 0; N <= cap; ++N) {
                if (N > 0) nfact *= N;
                if (n > N) continue;
                CAPTURE(probs);
                CAPTURE(n);
                CAPTURE(N);
                CHECK(g.coeff(N) * nfact == cdf_exact(n, N, m));
            }
        }
        CHECK(cdf_via_toeplitz(3, 12, m) == cdf_exact(3, 12, m));
        CHECK(cdf_via_toeplitz(1, 9, m) == cdf_exact(1, 9, m));
    }
}
