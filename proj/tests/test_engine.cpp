#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>

#include "equitab/cache.hpp"
#include "equitab/engine.hpp"
#include "equitab/error.hpp"
#include "equitab/lr.hpp"

using namespace equitab;

namespace {

struct TempFile {
    std::filesystem::path path;
    TempFile() {
        static std::mt19937_64 rng(std::random_device{}());
        path = std::filesystem::temp_directory_path() / ("equitab-test-" + std::to_string(rng()) + ".ndjson");
    }
    ~TempFile() { std::filesystem::remove(path); }
};

void append(const std::filesystem::path& p, const std::string& line) {
    std::ofstream out(p, std::ios::app);
    out << line << '\n';
}

}  // namespace

TEST_CASE("memoized ribbon expansions") {
    Engine engine;
    CHECK(engine.ribbon_schur({}) == SchurVector{{Partition{}, 1}});
    CHECK(engine.ribbon_schur({2}) == SchurVector{{Partition{2}, 1}});
    const SchurVector v = engine.ribbon_schur({3, 1, 2});
    CHECK(v == lr_expand(ribbon_to_skew({3, 1, 2})));
    const std::size_t size = engine.memo_size();
    CHECK(engine.ribbon_schur({2, 1, 3}) == v);
    CHECK(engine.memo_size() == size);
    CHECK(engine.ribbon_h({1, 1}) == HVector{{Partition{1, 1}, 1}, {Partition{2}, -1}});
}

TEST_CASE("products of ribbons") {
    Engine engine;
    CHECK(engine.product_expand({1}, {1}) == SchurVector{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(engine.product_expand({2, 1}, {3}) == engine.product_expand({3}, {2, 1}));
    CHECK(engine.product_expand({2, 3}, {1}) == engine.ribbon_schur({2, 3, 1}) + engine.ribbon_schur({2, 4}));
}

TEST_CASE("engine guard") {
    Engine engine(EngineConfig{.cell_guard = 10});
    CHECK_NOTHROW(engine.ribbon_schur({5, 5}));
    try {
        engine.ribbon_schur({6, 5});
        FAIL("expected a resource error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Resource);
    }
}

TEST_CASE("NDJSON store") {
    TempFile file;
    SchurVector expected;
    {
        auto store = std::make_shared<NdjsonStore>(file.path);
        CHECK(store->size() == 0);
        Engine engine({}, store);
        expected = engine.ribbon_schur({2, 3, 2});
        engine.ribbon_h({2, 3, 2});
    }
    {
        auto store = std::make_shared<NdjsonStore>(file.path);
        CHECK(store->size() == 2);
        CHECK(store->warnings().empty());
        auto terms = store->load({2, 3, 2}, BasisKind::Schur);
        REQUIRE(terms.has_value());
        CHECK(*terms == expected.terms());
        Engine engine({}, store);
        CHECK(engine.ribbon_schur({2, 3, 2}) == expected);
    }

    SUBCASE("corrupt and foreign records") {
        append(file.path, "{not json");
        append(file.path, R"({"key":[3,2],"basis":"s","terms":[[[5],1]],"engine_version":"another"})");
        append(file.path, R"({"key":[3,2],"basis":"s","terms":"oops","engine_version":"equitab-1.0"})");
        NdjsonStore store(file.path);
        CHECK(store.size() == 2);
        REQUIRE(store.warnings().size() == 2);
        CHECK(store.warnings()[0].find(":3:") != std::string::npos);
        CHECK_FALSE(store.load({3, 2}, BasisKind::Schur).has_value());
    }

    SUBCASE("non-canonical keys are rejected") {
        append(file.path, R"({"key":[3,2],"basis":"s","terms":[[[5],1]],"engine_version":"equitab-1.0"})");
        NdjsonStore store(file.path);
        CHECK(store.warnings().size() == 1);
    }
}

TEST_CASE("cache does not change results") {
    TempFile file;
    Engine plain;
    auto store = std::make_shared<NdjsonStore>(file.path);
    Engine cached({}, store);
    for (const Composition& alpha : {Composition{4, 5, 5, 4}, Composition{1, 2, 1, 2}, Composition{3, 3, 1}}) {
        CHECK(cached.ribbon_schur(alpha) == plain.ribbon_schur(alpha));
        CHECK(cached.ribbon_h(alpha) == plain.ribbon_h(alpha));
    }
    Engine reloaded({}, std::make_shared<NdjsonStore>(file.path));
    CHECK(reloaded.ribbon_schur({4, 5, 5, 4}) == plain.ribbon_schur({4, 5, 5, 4}));
}
