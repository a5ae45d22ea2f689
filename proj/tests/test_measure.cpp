#include <doctest.h>

#include "rwords/brute_force.hpp"
#include "rwords/measure.hpp"

#include "test_support.hpp"

using namespace rwords;

TEST_CASE("prob_partition pinned values") {
    const auto m1 = ProbModel::parse("1");
    CHECK(prob_partition(Partition({6}), m1) == 1);

    const auto mh = ProbModel::parse("1/2,1/2");
    CHECK(prob_partition(Partition({1, 1}), mh) == make_rat(1, 4));
}

TEST_CASE("prob_partition sums to one") {
    const auto m3 = ProbModel::parse("1/2,5/14,1/7");
    Rat total(0);
    for (const auto& lam : enumerate_partitions(6, 3)) total += prob_partition(lam, m3);
    CHECK(total == 1);
}

TEST_CASE("cdf_exact pinned values and edge cases") {
    const auto mh = ProbModel::parse("1/2,1/2");
    const auto m57 = ProbModel::parse("5/7,2/7");
    CHECK(cdf_exact(1, 2, mh) == make_rat(1, 4)); // only the word 21 has length 1
    CHECK(cdf_exact(2, 3, m57) == cdf_word_enumeration(2, 3, m57));
    CHECK(cdf_exact(0, 0, mh) == 1);
    CHECK(cdf_exact(5, 0, mh) == 1);
    for (int n = 3; n <= 6; ++n) CHECK(cdf_exact(n, 3, m57) == 1); // n >= N
    CHECK(cdf_exact(0, 4, mh) == 0);
}

TEST_CASE("k=1 forces lwis = N") {
    const auto m1 = ProbModel::parse("1");
    CHECK(cdf_exact(3, 3, m1) == 1);
    CHECK(cdf_exact(2, 3, m1) == 0);
}

TEST_CASE("cdf_exact is weakly increasing in n") {
    const auto m = ProbModel::parse("3/8,5/16,5/16");
    Rat prev(-1);
    for (int n = 0; n <= 9; ++n) {
        const Rat cur = cdf_exact(n, 9, m);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(prev == 1);
}

TEST_CASE("cdf_exact agrees with word enumeration on a small grid") {
    for (const char* probs : {"5/7,2/7", "1/2,5/14,1/7"}) {
        const auto m = ProbModel::parse(probs);
        for (int N = 0; N <= 6; ++N)
            for (int n = 0; n <= N; ++n) {
                CAPTURE(probs);
                CAPTURE(N);
                CAPTURE(n);
                CHECK(cdf_exact(n, N, m) == cdf_word_enumeration(n, N, m));
            }
    }
}

TEST_CASE("rsk shape histogram over all words matches prob_partition") {
    for (const char* probs : {"5/7,2/7", "3/8,5/16,5/16"}) {
        const auto m = ProbModel::parse(probs);
        for (int N : {4, 6}) {
            const auto hist = shape_distribution(m, N);
            Rat total(0);
            for (const auto& lam : enumerate_partitions(N, m.alphabet_size())) {
                const auto it = hist.find(lam);
                const Rat observed = it == hist.end() ? Rat(0) : it->second;
                CAPTURE(probs);
                CAPTURE(N);
                CHECK(observed == prob_partition(lam, m));
                total += observed;
            }
            CHECK(total == 1); // every word's shape was enumerated
        }
    }
}

TEST_CASE("worker count does not change the exact sum") {
    const auto m = ProbModel::parse("1/2,5/14,1/7");
    for (int workers : {2, 4, 7})
        CHECK(cdf_exact(8, 14, m, 1) == cdf_exact(8, 14, m, workers));
}

TEST_CASE("normalization holds for k up to 4 on moderate N") {
    Rng rng(555);
    for (int trial = 0; trial < 12; ++trial) {
        const ProbModel m = testing::random_model(rng, 4);
        const int N = 1 + static_cast<int>(rng.next_u64() % 14);
        CAPTURE(trial);
        CHECK(cdf_exact(N, N, m) == 1);
    }
}
