#include <doctest.h>

#include "equitab/error.hpp"
#include "equitab/lr.hpp"
#include "equitab/symmetric.hpp"

using namespace equitab;

TEST_CASE("h-expansion of ribbons") {
    CHECK(h_expand_ribbon({4}) == HVector{{Partition{4}, 1}});
    CHECK(h_expand_ribbon({1, 1}) == HVector{{Partition{1, 1}, 1}, {Partition{2}, -1}});
    CHECK(h_expand_ribbon({1, 2, 1, 2}).coeff({3, 2, 1}) == -3);
    CHECK(h_expand_ribbon({1, 2, 1, 2}).coeff({2, 2, 1, 1}) == 1);
}

TEST_CASE("Jacobi-Trudi") {
    CHECK(jt_h_expansion(SkewShape(Partition{2, 1}, Partition{})) == HVector{{Partition{2, 1}, 1}, {Partition{3}, -1}});
    CHECK(jt_h_expansion(SkewShape(Partition{5}, Partition{})) == HVector{{Partition{5}, 1}});
    for (const Composition& alpha : {Composition{1, 2, 1, 2}, Composition{3, 1, 1, 2}, Composition{1, 1, 1, 1, 1, 1}})
        CHECK(jt_h_expansion(ribbon_to_skew(alpha)) == h_expand_ribbon(alpha));
    const Composition ones(std::vector<int>(16, 1));
    CHECK(jt_h_expansion(ribbon_to_skew(ones)).size() == 231);
    CHECK_THROWS_AS(jt_h_expansion(ribbon_to_skew(Composition(std::vector<int>(17, 1)))), Error);
}

TEST_CASE("Pieri and h to s") {
    CHECK(pieri({}, 3) == SchurVector{{Partition{3}, 1}});
    CHECK(pieri({1}, 1) == SchurVector{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(pieri({2, 1}, 2).size() == 4);
    CHECK(h_to_s(HVector{{Partition{4}, 1}}) == SchurVector{{Partition{4}, 1}});
    CHECK(h_to_s(HVector{{Partition{1, 1}, 1}}) == SchurVector{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(h_to_s(h_expand_ribbon({2, 3, 1, 2})) == lr_expand(ribbon_to_skew({2, 3, 1, 2})));
    CHECK_THROWS_AS(h_to_s(HVector{{Partition{70}, 1}}), Error);
}

TEST_CASE("standard fillings") {
    CHECK(syt_count({1, 1, 1, 1, 1}) == 1);
    CHECK(syt_count({6}) == 1);
    CHECK(syt_count({2, 1}) == 2);
    CHECK(hook_length_count({3, 2}) == 5);
    CHECK(hook_length_count({3, 2, 1}) == 16);
    for (const Composition& alpha : {Composition{2, 3, 1, 2}, Composition{1, 2, 1, 2}, Composition{4, 4, 4}})
        CHECK(syt_count(alpha) == syt_count_by_coarsenings(alpha));
    CHECK_THROWS_AS(syt_count(Composition{11, 11}), Error);
}
