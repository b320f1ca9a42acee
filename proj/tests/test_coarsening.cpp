#include <doctest.h>

#include "equitab/coarsening.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"

using namespace equitab;

TEST_CASE("coarsenings") {
    const CoarseningMultiset expected{{{2, 2, 1, 1}, 1}, {{3, 2, 1}, 3}, {{3, 3}, 1}, {{4, 2}, 1}, {{5, 1}, 1}, {{6}, 1}};
    CHECK(coarsenings({1, 2, 1, 2}) == expected);
    CHECK(coarsenings({7}) == CoarseningMultiset{{{7}, 1}});
    CHECK(coarsenings({1, 1}) == CoarseningMultiset{{{1, 1}, 1}, {{2}, 1}});
    CHECK(coarsenings({}) == CoarseningMultiset{{Partition{}, 1}});
    CHECK_THROWS_AS(coarsenings(Composition(std::vector<int>(25, 1))), Error);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity({1, 2, 1, 2}, {3, 2, 1}) == 3);
    CHECK(multiplicity({3, 1, 2}, {3, 2, 1}) == 1);
    CHECK(multiplicity({1, 2, 1, 2}, {4, 1, 1}) == 0);
    CHECK(multiplicity({1, 2}, {2, 2}) == 0);
    CHECK(multiplicity({4, 4, 4, 5, 4, 4, 5, 4, 5}, {8, 8, 5, 5, 5, 4, 4}) == 2);
}

TEST_CASE("lambda_k and pair placements") {
    CHECK(lambda_k(4, 3, 6, 2) == Partition{8, 8, 5, 5, 5, 4, 4});
    CHECK(lambda_k(1, 1, 2, 1) == Partition{2, 2});
    CHECK_THROWS_AS(lambda_k(2, 1, 3, 2), Error);
    const Composition alpha{4, 4, 5, 4, 4, 5, 4, 4, 5};
    for (int k = 0; k <= 3; ++k) {
        CAPTURE(k);
        CHECK(pair_placement_count(alpha, 4, k) == multiplicity(alpha, lambda_k(4, 3, 6, k)));
    }
}

TEST_CASE("long inputs use the pair-placement route") {
    Composition alpha;
    for (int i = 0; i < 10; ++i) alpha = concat(alpha, {2, 2, 3});
    const RowCounts rc = row_counts(alpha, 2);
    const Partition lambda = lambda_k(2, rc.n, rc.m, 3);
    CHECK(multiplicity(alpha, lambda) == pair_placement_count(alpha, 2, 3));
    CHECK(multiplicity(alpha, lambda) == binomial_clamped(10, 3));
    CHECK_THROWS_AS(multiplicity(alpha, Partition::of(alpha).conjugate()), Error);
}

TEST_CASE("binomials") {
    for (int k = 0; k <= 6; ++k) CHECK(binomial_generalized(-1, k) == (k % 2 == 0 ? 1 : -1));
    CHECK(binomial_generalized(4, 2) == 6);
    CHECK(binomial_generalized(-3, 2) == 6);
    CHECK(binomial_clamped(-3, 2) == 0);
    CHECK(binomial_clamped(5, 0) == 1);
    CHECK(binomial_clamped(3, 5) == 0);
}

TEST_CASE("disjoint pairs") {
    for (int x = 0; x <= 8; ++x) CHECK(count_disjoint_pairs(x, 0) == 1);
    CHECK(count_disjoint_pairs(4, 2) == 1);
    CHECK(count_disjoint_pairs(5, 2) == 3);
    CHECK(count_disjoint_pairs(3, 2) == 0);
    CHECK(count_disjoint_pairs(1, 1) == 0);
}

TEST_CASE("Jensen identity") {
    CHECK(jensen_check(3, 2, 2));
    CHECK(jensen_check(-2, 5, 3));
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) CHECK(jensen_check(x, y, 0));
}
