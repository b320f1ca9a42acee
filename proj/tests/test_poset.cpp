#include <doctest.h>

#include "equitab/engine.hpp"
#include "equitab/error.hpp"
#include "equitab/poset.hpp"

using namespace equitab;

TEST_CASE("posets that are chains") {
    Engine engine;
    const PosetGraph g = build_poset(engine, 4, 2, 2);
    CHECK(g.is_chain);
    CHECK(g.chain() == std::vector<Composition>{{4, 5, 5, 4}, {4, 5, 4, 5}, {4, 4, 5, 5}, {5, 4, 4, 5}});
    CHECK(g.maximal.size() == 1);
    CHECK(g.elements[g.maximal[0]] == Composition{4, 5, 5, 4});
    CHECK(is_consistent(g));

    const PosetGraph h = build_poset(engine, 2, 2, 3);
    CHECK(h.is_chain);
    CHECK(h.chain() == std::vector<Composition>{{2, 3, 2, 3, 2}, {2, 2, 3, 3, 2}, {2, 2, 3, 2, 3}, {2, 3, 2, 2, 3},
                                                {2, 2, 2, 3, 3}, {3, 2, 2, 2, 3}});
    CHECK(h.covers.size() == 5);
    CHECK(h.relations.size() == 15);
}

TEST_CASE("degenerate posets") {
    Engine engine;
    const PosetGraph g = build_poset(engine, 3, 0, 4);
    CHECK(g.elements == std::vector<Composition>{{3, 3, 3, 3}});
    CHECK(g.is_chain);
    CHECK(g.relations.empty());
    CHECK_THROWS_AS(build_poset(engine, 0, 1, 1), Error);
}

TEST_CASE("an antichain pair") {
    Engine engine;
    const PosetGraph g = build_poset(engine, 2, 3, 3);
    CHECK_FALSE(g.is_chain);
    CHECK(g.filter_violations.empty());
    CHECK(is_consistent(g));
    CHECK(g.maximal.size() == 1);
}

TEST_CASE("fast mode agrees with full comparison") {
    Engine engine;
    for (auto [a, n, m] : {std::array{2, 3, 3}, std::array{3, 2, 4}, std::array{1, 4, 3}}) {
        const PosetGraph full = build_poset(engine, a, n, m, PosetMode::Verify);
        const PosetGraph fast = build_poset(engine, a, n, m, PosetMode::Fast);
        CHECK(full.relations == fast.relations);
        CHECK(full.covers == fast.covers);
        CHECK(fast.expansions_compared + fast.pairs_pruned == full.expansions_compared);
    }
}

TEST_CASE("transitive reduction") {
    std::vector<std::vector<bool>> rel(4, std::vector<bool>(4, false));
    rel[0][1] = rel[0][2] = rel[0][3] = rel[1][3] = rel[2][3] = true;
    CHECK(transitive_reduction(rel) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("guards") {
    Engine engine(EngineConfig{.poset_guard = 10});
    CHECK_THROWS_AS(build_poset(engine, 2, 3, 3), Error);
}
