#include <doctest.h>

#include "equitab/composition.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"
#include "equitab/skew_shape.hpp"

using namespace equitab;

TEST_CASE("reverse") {
    CHECK(reverse({1, 2}) == Composition{2, 1});
    CHECK(reverse({}) == Composition{});
    CHECK(reverse({3, 1, 3, 4, 1}) == Composition{1, 4, 3, 1, 3});
}

TEST_CASE("concatenation and near-concatenation") {
    CHECK(concat({1, 2}, {3, 1}) == Composition{1, 2, 3, 1});
    CHECK(near_concat({1, 2}, {3, 1}) == Composition{1, 5, 1});
    CHECK(concat({}, {3, 1}) == Composition{3, 1});
    CHECK_THROWS_AS(near_concat({}, {3, 1}), Error);
}

TEST_CASE("compose") {
    CHECK(compose({1, 2}, {3, 1}) == Composition{3, 1, 3, 4, 1});
    CHECK(compose({1}, {2, 5}) == Composition{2, 5});
    CHECK(compose({3}, {2}) == Composition{6});
    CHECK_THROWS_AS(compose({}, {2}), Error);
}

TEST_CASE("composition basics") {
    const Composition c{2, 3, 1};
    CHECK(c.size() == 6);
    CHECK(c.length() == 3);
    CHECK(Composition{}.size() == 0);
    CHECK_THROWS_AS(Composition({1, 0}), Error);
    CHECK(canonical({3, 2, 2}) == Composition{2, 2, 3});
    CHECK(canonical({2, 3, 3}) == Composition{2, 3, 3});
}

TEST_CASE("partition order and conjugate") {
    CHECK(lex_compare(Partition{4, 4}, Partition{4, 3, 1}) > 0);
    CHECK(lex_compare(Partition{3, 2, 1}, Partition{3, 2, 1}) == 0);
    CHECK(lex_compare(Partition{3, 2, 1}, Partition{3, 3}) < 0);
    CHECK((Partition{3, 2, 1} < Partition{3, 3}));
    CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
    CHECK(Partition::of({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition({2, 1, 0, 0}).length() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("move_cell") {
    CHECK(move_cell({9, 5, 4, 4}, 3) == Composition{8, 5, 5, 4});
    CHECK(move_cell(move_cell({10, 4, 4, 4}, 3), 2) == Composition{8, 5, 5, 4});
    CHECK(move_cell({2, 2}, 2) == Composition{1, 3});
    CHECK_THROWS_AS(move_cell({1, 2}, 2), Error);
    CHECK_THROWS_AS(move_cell({3, 2}, 3), Error);
    CHECK_THROWS_AS(move_cell({3, 2}, 1), Error);
}

TEST_CASE("parse_composition") {
    CHECK(parse_composition("1,2,1") == Composition{1, 2, 1});
    CHECK(parse_composition("10,4,4") == Composition{10, 4, 4});
    CHECK(parse_composition("") == Composition{});
    for (const char* bad : {"1,,2", "1,0", "a", "1,2,", "-1", "+1", "1 2"}) {
        CAPTURE(bad);
        try {
            parse_composition(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
    CHECK(to_string(Composition{10, 4}) == "10,4");
}

TEST_CASE("ribbon to skew shape") {
    const SkewShape s = ribbon_to_skew({1, 2, 3, 1});
    CHECK(s.outer() == Partition{4, 4, 3, 1});
    CHECK(s.inner() == Partition{3, 2});
    CHECK(to_string(s) == "4,4,3,1/3,2");
    CHECK(ribbon_to_skew({5}) == SkewShape(Partition{5}, Partition{}));
    CHECK(as_ribbon(s) == Composition{1, 2, 3, 1});
    CHECK(s.cell_count() == 7);
    CHECK_FALSE(as_ribbon(SkewShape(Partition{2, 2}, Partition{})).has_value());
}

TEST_CASE("transpose of a ribbon reads its columns") {
    const Composition alpha{1, 2, 3, 1};
    const auto t = as_ribbon(transpose(ribbon_to_skew(alpha)));
    REQUIRE(t.has_value());
    CHECK(t->vec() == ribbon_column_lengths(alpha));
    CHECK(ribbon_column_lengths(alpha) == std::vector<int>{2, 1, 2, 2});
}

TEST_CASE("union and intersection of skew shapes") {
    const SkewShape s(Partition{5, 2}, Partition{3});
    const SkewShape t(Partition{5, 3}, Partition{2});
    CHECK(skew_union(s, t) == SkewShape(Partition{5, 3}, Partition{3}));
    CHECK(skew_intersection(s, t) == SkewShape(Partition{5, 2}, Partition{2}));
    CHECK(skew_union(s, s) == s);
    CHECK(skew_intersection(s, s) == s);

    const SkewShape x(Partition{12, 8, 4}, Partition{7, 3});
    const SkewShape y(Partition{11, 8, 5}, Partition{7, 4, 1});
    CHECK(skew_union(x, y) == SkewShape(Partition{12, 8, 5}, Partition{7, 4, 1}));
    CHECK(as_ribbon(skew_union(x, y)) == Composition{5, 4, 4});
    CHECK(skew_intersection(x, y) == SkewShape(Partition{11, 8, 4}, Partition{7, 3}));
    CHECK(as_ribbon(skew_intersection(x, y)) == Composition{4, 5, 4});
}

TEST_CASE("disjoint stack shares no row or column") {
    const SkewShape s = disjoint_stack(ribbon_to_skew({2, 1}), ribbon_to_skew({3}));
    CHECK(s.cell_count() == 6);
    CHECK(s.rows() == 3);
    CHECK(s.row_first(2) > s.row_last(3));
}

TEST_CASE("equitable ribbons") {
    CHECK_FALSE(is_equitable({1, 2, 3, 1}).has_value());
    const auto p = is_equitable({2, 3, 2});
    REQUIRE(p.has_value());
    CHECK(p->a == 2);
    CHECK(is_equitable({2, 2}).has_value());
    CHECK_FALSE(is_equitable({}).has_value());
}

TEST_CASE("short ends") {
    CHECK(short_ends({2, 3, 2}, 2) == 2);
    CHECK(short_ends({2, 3, 3}, 2) == 1);
    CHECK(short_ends({5, 4, 4, 5}, 4) == 0);
    CHECK(short_ends({4}, 4) == 1);
    CHECK_THROWS_AS(short_ends({2, 4}, 2), Error);
}

TEST_CASE("profiles") {
    const Composition alpha{4, 4, 4, 4, 4, 4, 4, 4, 5, 4, 4, 4, 4, 4, 5, 5, 4, 4, 5};
    CHECK(profile(alpha, 4) == Profile{{8, 5, 0, 2, 0}});
    CHECK(quasi_profile(alpha, 4) == QuasiProfile{{2, 0, 1, 0, 0, 1, 0, 0, 1}});
    CHECK(quasi_profile({3, 3, 3}, 2) == QuasiProfile{{4}});
    CHECK(quasi_profile({4, 4, 5, 4, 4, 5, 4, 4, 5}, 4) == QuasiProfile{{1, 0, 3}});
    CHECK(lex_compare(QuasiProfile{{2, 0, 1}}, QuasiProfile{{1, 2}}) > 0);
    CHECK(lex_compare(QuasiProfile{{1, 2}}, QuasiProfile{{1, 2, 0}}) == 0);
    CHECK_THROWS_AS(profile({3, 5}, 3), Error);
    CHECK(row_counts({2, 3, 3, 2, 2}, 2) == RowCounts{2, 3});
}

TEST_CASE("box diagonal") {
    CHECK(box_diagonal(5, 8) == Composition{2, 3, 2, 3, 2});
    CHECK(box_diagonal(5, 3) == Composition{1, 2, 1, 2, 1});
    CHECK(box_diagonal(5, 7) == Composition{2, 2, 3, 2, 2});
    CHECK(box_diagonal(1, 7) == Composition{7});
    CHECK(box_diagonal(4, 1) == Composition{1, 1, 1, 1});
    // The line meets the top-left corners of cells (2,2) and (4,3), so the
    // two lower rows are long.
    CHECK(box_diagonal_geometric(3, 6) == Composition{2, 3, 3});
    CHECK(box_diagonal(3, 6) == Composition{2, 3, 3});
    for (int r = 1; r <= 12; ++r)
        for (int s = 1; s <= 12; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            CHECK(box_diagonal(r, s) == box_diagonal_geometric(r, s));
        }
    CHECK_THROWS_AS(box_diagonal(0, 3), Error);
}
