#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" EQUITAB_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("expand") {
    const Run r = run("expand --ribbon 2,3,2 --basis s");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ribbon"] == "2,3,2");
    CHECK(j["terms"][0]["partition"] == json::array({5, 2}));
    CHECK(j["terms"].size() == 6);

    const Run text = run("--format text expand 1,2,1");
    CHECK(text.code == 0);
    CHECK(text.out.find("s[2,2]") != std::string::npos);
}

TEST_CASE("compare") {
    Run r = run("compare 1,2,1 1,1,2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "Greater");
    CHECK(j["difference"].size() == 1);

    r = run("compare --alpha 4,5,5,4 --beta 5,4,4,5");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "Greater");
}

TEST_CASE("poset and boxdiag") {
    Run r = run("poset --a 2 --n 2 --m 3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_chain"] == true);
    CHECK(j["chain"].size() == 6);

    r = run("--format dot poset --a 2 --n 2 --m 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);

    r = run("boxdiag 3 6");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["ribbon"] == "2,3,3");
}

TEST_CASE("exit codes") {
    CHECK(run("expand --ribbon 1,,2").code == 2);
    CHECK(run("expand --ribbon abc").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--format dot expand 1,2").code == 2);
    CHECK(run("poset --a 0 --n 1 --m 1").code == 2);
    CHECK(run("--cell-guard 5 expand 3,3").code == 3);
    CHECK(run("--poset-guard 3 poset --a 2 --n 2 --m 2").code == 3);
    CHECK(run("verify --suite jensen --jensen-range 2").code == 0);
    CHECK(run("verify --suite nothing").code == 2);
}

TEST_CASE("deterministic output") {
    for (const std::string args : {"expand 3,1,2,2", "compare 2,3,3,2,2,2 3,2,2,3,2,2", "poset --a 1 --n 3 --m 2",
                                   "boxdiag 7 12", "verify --suite jensen --no-timing"}) {
        CAPTURE(args);
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--out writes the result to a file") {
    const auto path = temp("equitab-cli-out.json");
    const Run r = run("--out '" + path.string() + "' expand 2,2");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(json::parse(slurp(path))["terms"].size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("cache is transparent") {
    const auto cache = temp("equitab-cli-cache.ndjson");
    const std::string plain = run("poset --a 2 --n 2 --m 3").out;
    const Run first = run("--cache '" + cache.string() + "' poset --a 2 --n 2 --m 3");
    CHECK(first.out == plain);
    CHECK(std::filesystem::file_size(cache) > 0);
    const Run second = run("poset --a 2 --n 2 --m 3", "EQUITAB_CACHE='" + cache.string() + "'");
    CHECK(second.out == plain);

    {
        std::ofstream out(cache, std::ios::app);
        out << "{\"key\": broken\n";
    }
    const Run third = run("--cache '" + cache.string() + "' poset --a 2 --n 2 --m 3");
    CHECK(third.code == 0);
    CHECK(third.out == plain);
    std::filesystem::remove(cache);
}
