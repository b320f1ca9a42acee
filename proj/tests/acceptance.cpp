// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "equitab/coarsening.hpp"
#include "equitab/engine.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"
#include "equitab/lr.hpp"
#include "equitab/order.hpp"
#include "equitab/poset.hpp"
#include "equitab/symmetric.hpp"
#include "equitab/verify.hpp"

using namespace equitab;

namespace {

struct Result {
    bool ok;
    std::string detail;
};

Result ok(std::string detail = {}) { return {true, std::move(detail)}; }
Result bad(std::string detail) { return {false, std::move(detail)}; }

std::vector<Composition> all_up_to(int n) {
    std::vector<Composition> out;
    for (int size = 1; size <= n; ++size)
        for (auto& c : compositions_of(size)) out.push_back(std::move(c));
    return out;
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.passed) return c.name + ": " + c.detail;
    return {};
}

Composition cat(const std::vector<Composition>& pieces) {
    Composition out;
    for (const auto& p : pieces) out = concat(out, p);
    return out;
}

Composition rep(int value, int count) { return Composition(std::vector<int>(static_cast<std::size_t>(count), value)); }

int failures = 0;

void criterion(int number, const char* title, double budget_seconds, const std::function<Result()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = bad(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.ok && budget_seconds > 0 && seconds > budget_seconds) {
        r.ok = false;
        r.detail += " over the " + std::to_string(budget_seconds) + " s budget";
    }
    if (!r.ok) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", number, title, seconds, r.detail.empty() ? "" : ": ",
                r.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    Engine engine;

    criterion(1, "exact differences r121-r112 and r232-r223", 1.0, [&] {
        Engine fresh;
        const SchurVector d1 = fresh.ribbon_schur({1, 2, 1}) - fresh.ribbon_schur({1, 1, 2});
        const SchurVector d2 = fresh.ribbon_schur({2, 3, 2}) - fresh.ribbon_schur({2, 2, 3});
        if (d1 != SchurVector{{Partition{2, 2}, 1}}) return bad("r121-r112");
        if (d2 != SchurVector{{Partition{4, 3}, 1}}) return bad("r232-r223");
        return ok("s22 and s43");
    });

    criterion(2, "chains for a in {1,2}", 60.0, [&] {
        SuiteOptions o;
        o.a_values = {1, 2};
        o.chain_max = 5;
        const Report r = verify_chains(engine, o);
        if (!r.passed()) return bad(first_failure(r));
        return ok(std::to_string(r.checks.size()) + " checks");
    });

    criterion(3, "coarsening multiset of 1212", 0, [] {
        const CoarseningMultiset expected{{Partition{2, 2, 1, 1}, 1}, {Partition{3, 2, 1}, 3}, {Partition{3, 3}, 1},
                                          {Partition{4, 2}, 1},       {Partition{5, 1}, 1},    {Partition{6}, 1}};
        if (coarsenings({1, 2, 1, 2}) != expected) return bad("multiset differs");
        return ok();
    });

    criterion(4, "h_to_s and Jacobi-Trudi oracles, |alpha| <= 12, l(alpha) <= 8", 300.0, [&] {
        std::size_t count = 0;
        for (const auto& alpha : all_up_to(12)) {
            if (alpha.length() > 8) continue;
            const HVector h = h_expand_ribbon(alpha);
            if (h_to_s(h) != engine.ribbon_schur(alpha)) return bad("h_to_s " + to_string(alpha));
            if (jt_h_expansion(ribbon_to_skew(alpha)) != h) return bad("Jacobi-Trudi " + to_string(alpha));
            ++count;
        }
        return ok(std::to_string(count) + " ribbons");
    });

    criterion(5, "restricted tableaux measure cell moves, |alpha| <= 12", 0, [&] {
        std::size_t single = 0, pairs = 0;
        for (const auto& alpha : all_up_to(12)) {
            const std::size_t R = alpha.length();
            if (alpha.front() < 2) continue;
            for (std::size_t i = 2; i <= R; ++i) {
                const Composition beta = move_cell(alpha, i);
                int rhs = 1 - static_cast<int>(i);
                for (std::size_t k = 2; k <= i; ++k) rhs += beta[k - 1];
                if (beta.front() < rhs) continue;
                if (engine.ribbon_schur(beta) - engine.ribbon_schur(alpha) != restricted_expand(beta, static_cast<int>(i)))
                    return bad(to_string(alpha) + " i=" + std::to_string(i));
                ++single;
            }
            if (alpha.front() < 3) continue;
            for (std::size_t j = 3; j <= R; ++j)
                for (std::size_t i = 2; i < j; ++i) {
                    const Composition mj = move_cell(alpha, j);
                    const Composition mi = move_cell(alpha, i);
                    const Composition beta = move_cell(mj, i);
                    int rhs = 1 - static_cast<int>(j);
                    for (std::size_t k = 2; k <= j; ++k) rhs += beta[k - 1];
                    if (beta.front() < rhs) continue;
                    const SchurVector lhs = engine.ribbon_schur(beta) - engine.ribbon_schur(mj) - engine.ribbon_schur(mi) +
                                            engine.ribbon_schur(alpha);
                    if (lhs != restricted_expand2(beta, static_cast<int>(i), static_cast<int>(j)))
                        return bad(to_string(alpha) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                    ++pairs;
                }
        }
        return ok(std::to_string(single) + " single and " + std::to_string(pairs) + " double moves");
    });

    criterion(6, "short ends and quasi-profile conditions on five posets", 0, [&] {
        std::size_t relations = 0;
        for (auto [a, n, m] : {std::array{2, 2, 2}, std::array{2, 2, 3}, std::array{2, 3, 2}, std::array{1, 2, 3},
                               std::array{1, 3, 2}}) {
            const PosetGraph g = build_poset(engine, a, n, m);
            if (!g.filter_violations.empty()) return bad("filter violation in poset");
            for (const auto& [i, j] : g.relations) {
                const auto& x = g.elements[i];
                const auto& y = g.elements[j];
                if (short_ends(x, a) < short_ends(y, a)) return bad("SE " + to_string(x) + " > " + to_string(y));
                if (lex_compare(quasi_profile(x, a), quasi_profile(y, a)) > 0)
                    return bad("q " + to_string(x) + " > " + to_string(y));
                ++relations;
            }
        }
        return ok(std::to_string(relations) + " relations");
    });

    criterion(7, "multiplicities constant on quasi-profile groups", 0, [] {
        SuiteOptions o;
        o.a_values = {1, 2};
        o.ftom_max_n = 3;
        o.ftom_max_m = 8;
        o.ftom_max_k = 3;
        const Report r = verify_ftom_suite(o);
        if (!r.passed()) return bad(first_failure(r));
        const Partition lambda = lambda_k(4, 3, 6, 2);
        if (multiplicity({4, 4, 5, 4, 4, 5, 4, 4, 5}, lambda) != 3 || multiplicity({4, 4, 4, 5, 4, 4, 5, 4, 5}, lambda) != 2 ||
            multiplicity({4, 4, 4, 4, 5, 4, 5, 4, 5}, lambda) != 1)
            return bad("example multiplicities");
        return ok(std::to_string(r.checks.size()) + " checks");
    });

    criterion(8, "minimal and maximal elements", 0, [&] {
        const PosetGraph g22 = build_poset(engine, 2, 2, 2);
        const PosetGraph g23 = build_poset(engine, 2, 2, 3);
        const auto is_minimal = [](const PosetGraph& g, const Composition& x) {
            const std::size_t idx = g.index_of(x);
            for (const auto& [i, j] : g.relations)
                if (i == idx) return false;
            return true;
        };
        const auto is_maximal = [](const PosetGraph& g, const Composition& x) {
            const std::size_t idx = g.index_of(x);
            for (const auto& [i, j] : g.relations)
                if (j == idx) return false;
            return true;
        };
        if (!is_minimal(g22, {3, 2, 2, 3})) return bad("3223");
        if (!is_minimal(g23, {3, 2, 2, 2, 3})) return bad("32223");
        if (g22.maximal.size() != 1 || g22.elements[g22.maximal[0]] != Composition{2, 3, 3, 2}) return bad("2332");
        for (std::size_t k = 0; k < g22.elements.size(); ++k)
            if (k != g22.maximal[0] && !g22.greater(g22.maximal[0], k)) return bad("2332 not a maximum");
        if (!is_maximal(g23, {2, 3, 2, 3, 2})) return bad("23232");
        if (box_diagonal(5, 8) != Composition{2, 3, 2, 3, 2}) return bad("P(5,8) = " + to_string(box_diagonal(5, 8)));
        return ok();
    });

    criterion(9, "incomparable pairs with witnesses", 0, [&] {
        std::size_t count = 0;
        for (int a : {1, 2}) {
            const int b = a + 1;
            for (int t = 0; t <= 2; ++t) {
                const std::vector<std::pair<Composition, Composition>> pairs{
                    {cat({{a, b, b, a, a, a}, rep(a, t)}), cat({{b, a, a, b, a, a}, rep(a, t)})},
                    {cat({{a, a, b, b, b}, rep(a, t)}), cat({{b, a, b, a, b}, rep(a, t)})}};
                for (const auto& [x, y] : pairs)
                    for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                        const auto cmp = compare(engine, p, q);
                        if (cmp.verdict != Verdict::Incomparable) return bad(to_string(p) + " vs " + to_string(q));
                        if (!cmp.witness_pos || !cmp.witness_neg || cmp.witness_pos->coefficient <= 0 ||
                            cmp.witness_neg->coefficient >= 0)
                            return bad("witness for " + to_string(p));
                        ++count;
                    }
            }
        }
        return ok(std::to_string(count) + " ordered pairs");
    });

    criterion(10, "box diagonal formula, geometry and equitability, R,S <= 30", 5.0, [] {
        for (int R = 1; R <= 30; ++R)
            for (int S = 1; S <= 30; ++S) {
                const Composition p = box_diagonal(R, S);
                if (p != box_diagonal_geometric(R, S) || !is_equitable(p))
                    return bad("P(" + std::to_string(R) + "," + std::to_string(S) + ")");
            }
        return ok("900 shapes");
    });

    criterion(11, "reversal, transpose, product, standard fillings, Jensen", 0, [&] {
        const auto all = all_up_to(12);
        for (const auto& alpha : all)
            if (engine.ribbon_schur(alpha) != lr_expand(ribbon_to_skew(reverse(alpha)))) return bad("reversal " + to_string(alpha));
        for (const auto& alpha : all) {
            if (alpha.size() > 10) continue;
            SchurVector conj;
            for (const auto& [p, c] : engine.ribbon_schur(alpha)) conj.add(p.conjugate(), c);
            if (lr_expand(transpose(ribbon_to_skew(alpha))) != conj) return bad("transpose " + to_string(alpha));
        }
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 200; ++trial) {
            const int total = std::uniform_int_distribution<int>(2, 12)(rng);
            const int left = std::uniform_int_distribution<int>(1, total - 1)(rng);
            const auto pick = [&](int size) {
                const auto choices = compositions_of(size);
                return choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
            };
            const Composition x = pick(left);
            const Composition y = pick(total - left);
            if (engine.product_expand(x, y) != engine.ribbon_schur(concat(x, y)) + engine.ribbon_schur(near_concat(x, y)))
                return bad("product " + to_string(x) + " * " + to_string(y));
        }
        for (const auto& alpha : all)
            if (syt_count(alpha) != syt_count_by_coarsenings(alpha)) return bad("syt " + to_string(alpha));
        for (int x = -6; x <= 6; ++x)
            for (int y = -6; y <= 6; ++y)
                for (int v = 0; v <= 6; ++v)
                    if (!jensen_check(x, y, v)) return bad("jensen " + std::to_string(x) + "," + std::to_string(y));
        return ok(std::to_string(all.size()) + " ribbons");
    });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
