#include <doctest.h>

#include "rwords/schur.hpp"

#include "test_support.hpp"

using namespace rwords;

TEST_CASE("symmetric polynomial helpers") {
    const std::vector<Rat> half{make_rat(1, 2), make_rat(1, 2)};
    CHECK(elementary_symmetric(half) == std::vector<Rat>{Rat(1), Rat(1), make_rat(1, 4)});
    CHECK(complete_homogeneous(half, 2) == std::vector<Rat>{Rat(1), Rat(1), make_rat(3, 4)});
}

TEST_CASE("rational determinant basics") {
    CHECK(rational_det({{Rat(2)}}) == 2);
    CHECK(rational_det({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == -1);
    CHECK(rational_det({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 0);
}

TEST_CASE("jacobi-trudi on pinned values") {
    const auto m57 = ProbModel::parse("5/7,2/7");
    const auto mh = ProbModel::parse("1/2,1/2");
    CHECK(schur_jacobi_trudi(Partition({1}), m57).value == 1); // e_1 = sum p = 1
    CHECK(schur_jacobi_trudi(Partition({1}), mh).value == 1);
    CHECK(schur_jacobi_trudi(Partition({1, 1}), m57).value == make_rat(10, 49));
    CHECK(schur_jacobi_trudi(Partition({2}), mh).value == make_rat(3, 4));
    CHECK(schur_jacobi_trudi(Partition(), m57).value == 1);
}

TEST_CASE("bialternant on pinned values, distinct and tied") {
    const auto m57 = ProbModel::parse("5/7,2/7");
    const auto mh = ProbModel::parse("1/2,1/2");
    const auto m3 = ProbModel::parse("1/2,5/14,1/7");
    CHECK(schur_bialternant(Partition({1, 1}), m57).value == make_rat(10, 49));
    CHECK(schur_bialternant(Partition({2}), mh).value == make_rat(3, 4));
    CHECK(schur_bialternant(Partition({2, 1}), m3).value ==
          schur_jacobi_trudi(Partition({2, 1}), m3).value);
    CHECK(schur_bialternant(Partition(), mh).value == 1);
}

TEST_CASE("a partition with too many parts is rejected") {
    const auto mh = ProbModel::parse("1/2,1/2");
    CHECK_THROWS_AS(schur_jacobi_trudi(Partition({1, 1, 1}), mh), std::invalid_argument);
    CHECK_THROWS_AS(schur_bialternant(Partition({1, 1, 1}), mh), std::invalid_argument);
}

TEST_CASE("the two evaluators agree exactly on random pairs") {
    Rng rng(31337);
    int tied = 0, distinct = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const ProbModel model = testing::random_model(rng, 5);
        const Partition lam = testing::random_partition(rng, 12, model.alphabet_size());
        (model.all_distinct() ? distinct : tied) += 1;
        CAPTURE(trial);
        const SchurEval a = schur_jacobi_trudi(lam, model);
        const SchurEval b = schur_bialternant(lam, model);
        CHECK(a.value == b.value);
        CHECK(a.method == SchurMethod::JacobiTrudi);
        CHECK(b.method == SchurMethod::Bialternant);
        CHECK(sgn(a.value) >= 0);
    }
    // the generator must exercise both regimes
    CHECK(tied >= 20);
    CHECK(distinct >= 20);
}
