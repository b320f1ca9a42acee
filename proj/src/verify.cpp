#include "equitab/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "equitab/coarsening.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"
#include "equitab/lr.hpp"
#include "equitab/order.hpp"
#include "equitab/poset.hpp"
#include "equitab/symmetric.hpp"

namespace equitab {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    seconds += other.seconds;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n <= 0) {
        out.emplace_back();
        return out;
    }
    // Bit k of mask set: a cut after cell k+1.
    const unsigned cuts = static_cast<unsigned>(n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (unsigned k = 0; k < cuts; ++k) {
            if (mask & (std::uint64_t{1} << (cuts - 1 - k))) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome failed(std::string detail) { return {false, std::move(detail)}; }

class Recorder {
public:
    explicit Recorder(std::string suite) : start_(Clock::now()) { report_.suite = std::move(suite); }

    void check(std::string name, const std::function<Outcome()>& body) {
        const auto t0 = Clock::now();
        Outcome out{false, {}};
        try {
            out = body();
        } catch (const std::exception& e) {
            out = failed(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report_.checks.push_back({std::move(name), out.ok, std::move(out.detail), secs});
    }

    Report finish() {
        report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    Report report_;
    Clock::time_point start_;
};

Composition rep(int part, int count) { return Composition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part)); }

Composition cat(std::initializer_list<Composition> pieces) {
    Composition out;
    for (const auto& p : pieces) out = concat(out, p);
    return out;
}

std::string show(const SchurVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : v) {
        os << (first ? "" : " ") << c << "*[" << to_string(p) << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

std::string show(const std::vector<Composition>& seq) {
    std::string out;
    for (const auto& c : seq) out += (out.empty() ? "" : " > ") + to_string(c);
    return out;
}

std::string family(int a, int n, int m) {
    return "R(" + std::to_string(a + 1) + "^" + std::to_string(n) + " " + std::to_string(a) + "^" + std::to_string(m) + ")";
}

// Each relation strict by expansion and the built poset is the same chain.
Outcome check_chain(Engine& engine, int a, int n, int m, const std::vector<Composition>& chain) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const auto cmp = compare(engine, chain[k], chain[k + 1]);
        if (cmp.verdict != Verdict::Greater)
            return failed(to_string(chain[k]) + " vs " + to_string(chain[k + 1]) + ": " + to_string(cmp.verdict));
    }
    const PosetGraph g = build_poset(engine, a, n, m);
    std::vector<Composition> expected;
    for (const auto& c : chain) expected.push_back(canonical(c));
    if (!g.is_chain) return failed(family(a, n, m) + " is not a chain");
    if (g.chain() != expected) return failed("poset order " + show(g.chain()) + ", expected " + show(expected));
    return pass(show(expected));
}

std::vector<Composition> chain1(int a, int m) {
    std::vector<Composition> out;
    for (int i = m / 2; i >= 0; --i) out.push_back(cat({rep(a, i), {a + 1}, rep(a, m - i)}));
    return out;
}

std::vector<Composition> chain2(int a, int n) {
    std::vector<Composition> out;
    for (int i = 0; i <= n / 2; ++i) out.push_back(cat({rep(a + 1, i), {a}, rep(a + 1, n - i)}));
    return out;
}

std::vector<Composition> chain3(int a) {
    const int b = a + 1;
    return {{a, b, b, a}, {b, a, b, a}, {b, b, a, a}, {b, a, a, b}};
}

std::vector<Composition> chain4(int a) {
    const int b = a + 1;
    return {{a, b, a, b, a}, {a, b, b, a, a}, {b, a, b, a, a}, {b, a, a, b, a}, {b, b, a, a, a}, {b, a, a, a, b}};
}

// The exchange certificate for (delta, gamma) exists with the expected case
// and relates greater > lesser up to reversal; compare agrees.
Outcome check_exchange(Engine& engine, const Composition& delta, const Composition& gamma, int a, int case_number,
                       const Composition& greater, const Composition& lesser) {
    const auto cert = certified_exchange_inequality(delta, gamma, a, a + 1);
    const std::string tag = "delta=" + to_string(delta) + " gamma=" + to_string(gamma);
    if (!cert) return failed(tag + ": no certificate");
    if (cert->case_number != case_number)
        return failed(tag + ": case " + std::to_string(cert->case_number) + ", expected " + std::to_string(case_number));
    if (canonical(cert->greater) != canonical(greater) || canonical(cert->lesser) != canonical(lesser))
        return failed(tag + ": certifies " + to_string(cert->greater) + " >= " + to_string(cert->lesser));
    const auto cmp = compare(engine, cert->greater, cert->lesser);
    if (cmp.verdict != Verdict::Greater && cmp.verdict != Verdict::Equal)
        return failed(tag + ": compare gives " + to_string(cmp.verdict));
    return pass(tag + " case " + std::to_string(case_number));
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------

Report verify_chains(Engine& engine, const SuiteOptions& options) {
    Recorder rec("chains");
    for (int a : options.a_values) {
        const std::string at = " a=" + std::to_string(a);
        const int b = a + 1;
        for (int m = 1; m <= options.chain_max; ++m)
            rec.check("chain 1" + at + " m=" + std::to_string(m), [&] { return check_chain(engine, a, 1, m, chain1(a, m)); });
        for (int n = 1; n <= options.chain_max; ++n)
            rec.check("chain 2" + at + " n=" + std::to_string(n), [&] { return check_chain(engine, a, n, 1, chain2(a, n)); });
        rec.check("chain 3" + at, [&] { return check_chain(engine, a, 2, 2, chain3(a)); });
        rec.check("chain 4" + at, [&] { return check_chain(engine, a, 2, 3, chain4(a)); });

        for (int m = 2; m <= options.chain_max; ++m) {
            const auto c = chain1(a, m);
            for (int i = m / 2; i >= 1; --i) {
                const std::size_t pos = static_cast<std::size_t>(m / 2 - i);
                rec.check("chain 1 certificate" + at + " m=" + std::to_string(m) + " i=" + std::to_string(i), [&] {
                    return check_exchange(engine, rep(a, i - 1), rep(a, m - i), a, 1, c[pos], c[pos + 1]);
                });
            }
        }
        for (int n = 2; n <= options.chain_max; ++n) {
            const auto c = chain2(a, n);
            for (int i = 1; i <= n / 2; ++i) {
                const std::size_t pos = static_cast<std::size_t>(i - 1);
                rec.check("chain 2 certificate" + at + " n=" + std::to_string(n) + " i=" + std::to_string(i), [&] {
                    return check_exchange(engine, rep(b, i - 1), rep(b, n - i), a, 1, c[pos], c[pos + 1]);
                });
            }
        }
        const auto c3 = chain3(a);
        const auto c4 = chain4(a);
        rec.check("chain 3 relation 1 certificate" + at, [&] { return check_exchange(engine, {}, {b, a}, a, 1, c3[0], c3[1]); });
        rec.check("chain 3 relation 2 certificate" + at, [&] { return check_exchange(engine, {b}, {a}, a, 1, c3[1], c3[2]); });
        rec.check("chain 3 relation 3 via product and move" + at, [&] {
            const SchurVector lhs = engine.ribbon_schur(c3[2]) - engine.ribbon_schur(c3[3]);
            const Composition top{2 * a + 2, a, a};
            const SchurVector rhs = engine.ribbon_schur(move_cell(top, 3)) - engine.ribbon_schur(top);
            if (lhs != rhs) return failed("difference " + show(lhs) + " vs move difference " + show(rhs));
            if (engine.product_expand({b}, {b, a, a}) != engine.product_expand({b}, {a, a, b}))
                return failed("products differ");
            const auto cert = certified_move_inequality(top, 3);
            if (!cert) return failed("no move certificate for " + to_string(top));
            if (cert->difference != lhs) return failed("certificate difference " + show(cert->difference));
            return pass(show(lhs));
        });
        rec.check("chain 4 relation 1 certificate" + at, [&] { return check_exchange(engine, {a, b}, {a}, a, 2, c4[0], c4[1]); });
        rec.check("chain 4 relation 2 certificate" + at, [&] { return check_exchange(engine, {}, {b, a, a}, a, 1, c4[1], c4[2]); });
        rec.check("chain 4 relation 3 certificate" + at, [&] { return check_exchange(engine, {a}, {a, b}, a, 1, c4[2], c4[3]); });

        for (int n = 2; n <= 3; ++n) {
            for (int m = 2; m <= 4; ++m) {
                if (n == 2 && (m == 2 || m == 3)) continue;
                rec.check("no further chains " + family(a, n, m), [&] {
                    const PosetGraph g = build_poset(engine, a, n, m);
                    if (g.is_chain) return failed(family(a, n, m) + " is a chain");
                    for (std::size_t i = 0; i < g.elements.size(); ++i)
                        for (std::size_t j = i + 1; j < g.elements.size(); ++j)
                            if (!g.greater(i, j) && !g.greater(j, i))
                                return pass(to_string(g.elements[i]) + " || " + to_string(g.elements[j]));
                    return failed("no incomparable pair");
                });
            }
        }
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------

Report verify_ftom(int a, int n, int m, int k) {
    require(a >= 1 && n >= 0 && m >= 0 && k >= 0, "verify_ftom needs a >= 1 and n, m, k >= 0");
    require(m >= 2 * k, "verify_ftom needs m >= 2k");
    Recorder rec("ftom");
    const std::string tag = family(a, n, m) + " k=" + std::to_string(k);
    rec.check("constant within quasi-profile groups " + tag, [&] {
        const Partition lambda = lambda_k(a, n, m, k);
        std::map<std::vector<int>, std::set<std::int64_t>> groups;
        for (const auto& alpha : equitable_elements(a, n, m, std::numeric_limits<std::int64_t>::max())) {
            const std::int64_t mult = multiplicity(alpha, lambda);
            const std::int64_t pairs = pair_placement_count(alpha, a, k);
            if (mult != pairs)
                return failed(to_string(alpha) + ": coarsening count " + std::to_string(mult) + " vs pair placements " +
                              std::to_string(pairs));
            const QuasiProfile q = quasi_profile(alpha, a);
            std::vector<int> key;
            for (int j = 0; j + 2 <= k; ++j) key.push_back(q[static_cast<std::size_t>(j)]);
            const std::int64_t value = k == 0 ? mult : mult + sign_pow(k) * q[static_cast<std::size_t>(k - 1)];
            groups[key].insert(value);
        }
        std::string constants;
        for (const auto& [key, values] : groups) {
            if (values.size() != 1) return failed("group with " + std::to_string(values.size()) + " distinct values");
            constants += (constants.empty() ? "C=" : ",") + std::to_string(*values.begin());
        }
        if (k == 0 && !groups.empty() && *groups.begin()->second.begin() != 1) return failed("m(lambda_0) != 1");
        if (k == 1 && !groups.empty() && *groups.begin()->second.begin() != m - (n + 1))
            return failed("C_1 = " + std::to_string(*groups.begin()->second.begin()) + " instead of m-(n+1)");
        return pass(constants);
    });
    return rec.finish();
}

Report verify_ftom_suite(const SuiteOptions& options) {
    Report out;
    out.suite = "ftom";
    for (int a : options.a_values)
        for (int n = 0; n <= options.ftom_max_n; ++n)
            for (int m = 0; m <= options.ftom_max_m; ++m)
                for (int k = 0; k <= options.ftom_max_k && 2 * k <= m; ++k) out.append(verify_ftom(a, n, m, k));
    Recorder rec("ftom");
    rec.check("example profiles 2220 3210 4110 at a=4 k=2", [] {
        const Partition lambda = lambda_k(4, 3, 6, 2);
        const std::vector<std::pair<Composition, std::int64_t>> cases{
            {{4, 4, 5, 4, 4, 5, 4, 4, 5}, 3}, {{4, 4, 4, 5, 4, 4, 5, 4, 5}, 2}, {{4, 4, 4, 4, 5, 4, 5, 4, 5}, 1}};
        std::string got;
        for (const auto& [alpha, expected] : cases) {
            const std::int64_t mult = multiplicity(alpha, lambda);
            const int q1 = quasi_profile(alpha, 4)[1];
            got += (got.empty() ? "" : ",") + std::to_string(mult);
            if (mult != expected || mult != 3 - q1) return failed(to_string(alpha) + ": " + std::to_string(mult));
        }
        return pass(got);
    });
    out.append(rec.finish());
    return out;
}

// ---------------------------------------------------------------------------

Report verify_shortends(Engine& engine, const SuiteOptions&) {
    Recorder rec("shortends");
    const std::vector<std::array<int, 3>> posets{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {1, 2, 3}, {1, 3, 2}};
    for (const auto& [a, n, m] : posets) {
        rec.check("short ends necessary " + family(a, n, m), [&] {
            const PosetGraph g = build_poset(engine, a, n, m);
            for (const auto& [i, j] : g.relations) {
                const auto& x = g.elements[i];
                const auto& y = g.elements[j];
                if (short_ends(x, a) < short_ends(y, a)) return failed(to_string(x) + " > " + to_string(y));
            }
            return pass(std::to_string(g.relations.size()) + " relations");
        });
    }
    rec.check("example chain R(5^2 4^2) with SE 2,1,1,0", [&] {
        const PosetGraph g = build_poset(engine, 4, 2, 2);
        const std::vector<Composition> expected{{4, 5, 5, 4}, {4, 5, 4, 5}, {4, 4, 5, 5}, {5, 4, 4, 5}};
        if (!g.is_chain || g.chain() != expected) return failed("order " + show(g.chain()));
        const std::vector<int> se{2, 1, 1, 0};
        for (std::size_t k = 0; k < expected.size(); ++k)
            if (short_ends(expected[k], 4) != se[k]) return failed("SE of " + to_string(expected[k]));
        return pass(show(expected));
    });
    rec.check("remark differences r121-r112 and r232-r223", [&] {
        const SchurVector d1 = engine.ribbon_schur({1, 2, 1}) - engine.ribbon_schur({1, 1, 2});
        const SchurVector d2 = engine.ribbon_schur({2, 3, 2}) - engine.ribbon_schur({2, 2, 3});
        if (d1 != SchurVector{{Partition{2, 2}, 1}}) return failed("r121-r112 = " + show(d1));
        if (d2 != SchurVector{{Partition{4, 3}, 1}}) return failed("r232-r223 = " + show(d2));
        return pass(show(d1) + "; " + show(d2));
    });
    rec.check("lex-largest contents of 21212 and 12221", [] {
        const Partition c1 = lex_largest_content(ribbon_to_skew({2, 1, 2, 1, 2}));
        const Partition c2 = lex_largest_content(ribbon_to_skew({1, 2, 2, 2, 1}));
        if (c1 != Partition{4, 2, 2}) return failed("21212 -> " + to_string(c1));
        if (c2 != Partition{4, 4}) return failed("12221 -> " + to_string(c2));
        return pass();
    });
    for (const auto& [a, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}}) {
        rec.check("comfortable split " + family(a, n, 2), [&, a = a, n = n] {
            std::vector<int> parts;
            for (int i = 0; i < n; ++i) parts.push_back(a + 1);
            for (int i = 0; i < 2; ++i) parts.push_back(a);
            std::sort(parts.begin(), parts.end());
            std::set<std::int64_t> comfortable;
            do {
                const Composition alpha(parts);
                const Partition nu = comfortable_content(alpha, a);
                const ComfortableSplit split = comfortable_split(alpha, a, nu);
                comfortable.insert(split.comfortable);
                int long_intermediate = 0;
                for (std::size_t r = 1; r + 1 < alpha.length(); ++r)
                    if (alpha[r] == a + 1) ++long_intermediate;
                if (split.uncomfortable != long_intermediate)
                    return failed(to_string(alpha) + ": " + std::to_string(split.uncomfortable) + " uncomfortable tableaux");
            } while (std::next_permutation(parts.begin(), parts.end()));
            if (comfortable.size() != 1) return failed("comfortable counts vary");
            return pass("A_c=" + std::to_string(*comfortable.begin()));
        });
    }
    rec.check("uncomfortable count of 5554 at content 13,6", [] {
        const ComfortableSplit split = comfortable_split({5, 5, 5, 4}, 4, Partition{13, 6});
        if (split.uncomfortable != 2) return failed(std::to_string(split.uncomfortable));
        return pass();
    });
    rec.check("raise 555454455", [&] {
        const RaiseResult r = raise_to_short_ends({5, 5, 5, 4, 5, 4, 4, 5, 5}, 4);
        const std::vector<Composition> expected{
            {5, 5, 5, 4, 5, 4, 4, 5, 5}, {5, 5, 4, 5, 5, 4, 4, 5, 5}, {5, 4, 5, 5, 5, 4, 4, 5, 5},
            {4, 5, 5, 5, 5, 4, 4, 5, 5}, {5, 5, 4, 4, 5, 5, 5, 5, 4}, {5, 4, 5, 4, 5, 5, 5, 5, 4},
            {4, 5, 5, 4, 5, 5, 5, 5, 4}};
        if (r.path != expected) return failed("path " + show(r.path));
        // Six relations, one of them the reversal.
        if (r.path.size() != 7 || r.steps.size() != 5) return failed(std::to_string(r.steps.size()) + " exchanges");
        return pass(to_string(r.result));
    });
    std::vector<std::array<int, 3>> raise_families = posets;
    raise_families.push_back({4, 2, 2});
    for (const auto& [a, n, m] : raise_families) {
        rec.check("raise certificates " + family(a, n, m), [&] {
            std::vector<int> parts;
            for (int i = 0; i < n; ++i) parts.push_back(a + 1);
            for (int i = 0; i < m; ++i) parts.push_back(a);
            std::sort(parts.begin(), parts.end());
            std::size_t steps = 0;
            do {
                const Composition beta(parts);
                const RaiseResult r = raise_to_short_ends(beta, a);
                if (short_ends(r.result, a) != 2) return failed(to_string(beta) + " raised to " + to_string(r.result));
                const Verdict v = compare(engine, r.result, beta).verdict;
                if (v != Verdict::Greater && v != Verdict::Equal)
                    return failed(to_string(r.result) + " vs " + to_string(beta) + ": " + to_string(v));
                for (const auto& step : r.steps) {
                    const Verdict sv = compare(engine, step.greater, step.lesser).verdict;
                    if (sv != Verdict::Greater && sv != Verdict::Equal)
                        return failed("step " + to_string(step.greater) + " vs " + to_string(step.lesser));
                }
                steps += r.steps.size();
            } while (std::next_permutation(parts.begin(), parts.end()));
            return pass(std::to_string(steps) + " exchange steps");
        });
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------

Report verify_smalls(Engine& engine, const SuiteOptions& options) {
    Recorder rec("smalls");
    const std::vector<std::array<int, 3>> posets{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {1, 2, 3}, {1, 3, 2}};
    for (const auto& [a, n, m] : posets) {
        rec.check("quasi-profile necessary " + family(a, n, m), [&] {
            const PosetGraph g = build_poset(engine, a, n, m);
            for (const auto& [i, j] : g.relations) {
                const auto& x = g.elements[i];
                const auto& y = g.elements[j];
                if (lex_compare(quasi_profile(x, a), quasi_profile(y, a)) > 0)
                    return failed(to_string(x) + " > " + to_string(y));
            }
            if (!g.filter_violations.empty()) return failed("filter violations recorded");
            return pass(std::to_string(g.relations.size()) + " relations");
        });
    }
    rec.check("example profiles 85020 and 33333", [] {
        const Composition alpha = cat({rep(4, 8), {5}, rep(4, 5), {5, 5}, rep(4, 2), {5}});
        const Composition beta = cat({rep(4, 3), {5}, rep(4, 3), {5}, rep(4, 3), {5}, rep(4, 3), {5}, rep(4, 3)});
        if (profile(alpha, 4) != Profile{{8, 5, 0, 2, 0}}) return failed("p(alpha)");
        if (quasi_profile(alpha, 4) != QuasiProfile{{2, 0, 1, 0, 0, 1, 0, 0, 1}}) return failed("q(alpha)");
        if (profile(beta, 4) != Profile{{3, 3, 3, 3, 3}}) return failed("p(beta)");
        if (quasi_profile(beta, 4) != QuasiProfile{{0, 0, 0, 5}}) return failed("q(beta)");
        if (filter_quasi_profile(alpha, beta, 4) != FilterVerdict::CannotBeGreater) return failed("filter allows alpha >= beta");
        return pass();
    });
    rec.check("example chain quasi-profiles 12 12 201 201", [] {
        const std::vector<Composition> chain{{4, 5, 5, 4}, {5, 4, 5, 4}, {5, 5, 4, 4}, {5, 4, 4, 5}};
        const std::vector<QuasiProfile> expected{{{1, 2}}, {{1, 2}}, {{2, 0, 1}}, {{2, 0, 1}}};
        for (std::size_t k = 0; k < chain.size(); ++k)
            if (quasi_profile(chain[k], 4) != expected[k]) return failed(to_string(chain[k]));
        return pass();
    });
    rec.check("coarsenings of 1212", [] {
        const CoarseningMultiset expected{{{2, 2, 1, 1}, 1}, {{3, 2, 1}, 3}, {{3, 3}, 1}, {{4, 2}, 1}, {{5, 1}, 1}, {{6}, 1}};
        if (coarsenings({1, 2, 1, 2}) != expected) return failed("multiset differs");
        if (h_expand_ribbon({1, 2, 1, 2}).coeff({3, 2, 1}) != -3) return failed("h coefficient of 321");
        return pass();
    });
    for (int a : options.a_values) {
        const int b = a + 1;
        for (int t = 0; t <= 2; ++t) {
            const std::string tag = " a=" + std::to_string(a) + " t=" + std::to_string(t);
            const auto incomparable = [&](const Composition& x, const Composition& y) -> Outcome {
                for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                    const auto cmp = compare(engine, p, q);
                    if (cmp.verdict != Verdict::Incomparable)
                        return failed(to_string(p) + " vs " + to_string(q) + ": " + to_string(cmp.verdict));
                    if (!cmp.witness_pos || !cmp.witness_neg || cmp.witness_pos->coefficient <= 0 ||
                        cmp.witness_neg->coefficient >= 0)
                        return failed("missing witness");
                }
                const auto cmp = compare(engine, x, y);
                return pass("+" + std::to_string(cmp.witness_pos->coefficient) + "*[" + to_string(cmp.witness_pos->partition) +
                            "] " + std::to_string(cmp.witness_neg->coefficient) + "*[" +
                            to_string(cmp.witness_neg->partition) + "]");
            };
            rec.check("incomparable pair 1" + tag, [&] {
                const Composition x = cat({{a, b, b, a, a, a}, rep(a, t)});
                const Composition y = cat({{b, a, a, b, a, a}, rep(a, t)});
                if (filter_short_ends(y, x, a) != FilterVerdict::CannotBeGreater) return failed("short ends filter");
                return incomparable(x, y);
            });
            rec.check("incomparable pair 2" + tag, [&] {
                const Composition x = cat({{a, a, b, b, b}, rep(a, t)});
                const Composition y = cat({{b, a, b, a, b}, rep(a, t)});
                if (filter_quasi_profile(x, y, a) != FilterVerdict::CannotBeGreater) return failed("quasi-profile filter");
                return incomparable(x, y);
            });
        }
    }
    rec.check("h_lambda has least Schur term s_lambda, |lambda| <= 8", [] {
        std::size_t count = 0;
        for (int size = 0; size <= 8; ++size) {
            std::set<Partition> parts;
            for (const auto& c : compositions_of(size)) parts.insert(Partition::of(c));
            for (const auto& lambda : parts) {
                const auto least = h_to_s(HVector{{lambda, 1}}).lex_least();
                if (!least || least->first != lambda || least->second != 1) return failed("h_" + to_string(lambda));
                ++count;
            }
        }
        return pass(std::to_string(count) + " partitions");
    });
    return rec.finish();
}

// ---------------------------------------------------------------------------

Report verify_minimal(Engine& engine, int a, int n, int m) {
    require(a >= 1 && n >= 0 && m >= 0, "verify_minimal needs a >= 1 and n, m >= 0");
    Recorder rec("minimal");
    const int b = a + 1;
    const Composition alpha = cat({rep(b, (n + 1) / 2), rep(a, m), rep(b, n / 2)});
    rec.check("minimal " + to_string(alpha) + " in " + family(a, n, m), [&] {
        const PosetGraph g = build_poset(engine, a, n, m);
        const std::size_t idx = g.index_of(alpha);
        for (const auto& [i, j] : g.relations)
            if (i == idx) return failed(to_string(alpha) + " > " + to_string(g.elements[j]));
        return pass();
    });
    if (n < 2 || m < 2) return rec.finish();
    for (int t = 1; t < n / 2; ++t) {
        const Composition beta = cat({rep(b, n - t), rep(a, m), rep(b, t)});
        const auto mu = [&](int k) { return Partition::sorted(cat({rep(2 * b, k), rep(b, n - 2 * k), rep(a, m)}).vec()); };
        const auto mu1 = [&](int k) {
            return Partition::sorted(cat({rep(2 * b, k), {2 * a + 1}, rep(b, n - 2 * k - 1), rep(a, m - 1)}).vec());
        };
        const auto mu2 = [&](int k) {
            return Partition::sorted(cat({rep(2 * b, k), rep(2 * a + 1, 2), rep(b, n - 2 * k - 2), rep(a, m - 2)}).vec());
        };
        const std::string tag = " " + to_string(alpha) + " vs " + to_string(beta);
        const auto diff_pattern = [&](const std::function<Partition(int)>& family_of, int equal_to, int sign_at, int top) -> Outcome {
            std::string diffs;
            for (int k = 0; k <= top; ++k) {
                const std::int64_t d = multiplicity(alpha, family_of(k)) - multiplicity(beta, family_of(k));
                diffs += (diffs.empty() ? "" : ",") + std::to_string(d);
                const std::int64_t expected = k <= equal_to ? 0 : (k == sign_at ? sign_pow(sign_at) : d);
                if (d != expected) return failed("k=" + std::to_string(k) + " difference " + std::to_string(d));
            }
            return pass(diffs);
        };
        rec.check("mu_k multiplicities t=" + std::to_string(t) + tag,
                  [&] { return diff_pattern(mu, t, t + 1, std::min(t + 1, n / 2)); });
        rec.check("mu'_k multiplicities t=" + std::to_string(t) + tag, [&] { return diff_pattern(mu1, t - 1, t, t); });
        rec.check("mu''_k multiplicities t=" + std::to_string(t) + tag, [&] { return diff_pattern(mu2, t - 1, t, t); });
        rec.check("least h-term of difference t=" + std::to_string(t) + tag, [&] {
            const HVector d = engine.ribbon_h(alpha) - engine.ribbon_h(beta);
            const auto least = d.lex_least();
            if (!least) return failed("difference vanishes");
            if (least->first != mu1(t) || least->second != -1)
                return failed(std::to_string(least->second) + "*h[" + to_string(least->first) + "]");
            return pass("-h[" + to_string(least->first) + "]");
        });
    }
    return rec.finish();
}

Report verify_minimal_suite(Engine& engine, const SuiteOptions& options) {
    Report out;
    out.suite = "minimal";
    const std::vector<std::pair<int, int>> sizes{{0, 3}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3},
                                                 {4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}};
    for (int a : options.a_values)
        for (const auto& [n, m] : sizes) out.append(verify_minimal(engine, a, n, m));
    return out;
}

// ---------------------------------------------------------------------------

Report verify_maximal_corollaries(Engine& engine, const SuiteOptions& options) {
    Recorder rec("maximal");
    for (int a : options.a_values) {
        const int b = a + 1;
        for (int n = 0; n <= 4; ++n) {
            const Composition top = cat({{a}, rep(b, n), {a}});
            rec.check("unique maximum " + to_string(top) + " of " + family(a, n, 2), [&] {
                const PosetGraph g = build_poset(engine, a, n, 2);
                const std::size_t idx = g.index_of(top);
                if (g.maximal != std::vector<std::size_t>{idx}) return failed(std::to_string(g.maximal.size()) + " maximal elements");
                for (std::size_t j = 0; j < g.elements.size(); ++j)
                    if (j != idx && !g.greater(idx, j)) return failed("not above " + to_string(g.elements[j]));
                return pass();
            });
        }
        for (const auto& [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
            Composition even = rep(a, d);
            for (int i = 0; i < n; ++i) even = cat({even, {b}, rep(a, d)});
            const int m = d * (n + 1);
            rec.check("even distribution " + to_string(even) + " maximal in " + family(a, n, m), [&] {
                const PosetGraph g = build_poset(engine, a, n, m);
                const std::size_t idx = g.index_of(even);
                if (std::find(g.maximal.begin(), g.maximal.end(), idx) == g.maximal.end()) return failed("not maximal");
                return pass(std::to_string(g.maximal.size()) + " maximal elements");
            });
        }
    }
    rec.check("2332 unique maximum of R(3^2 2^2)", [&] {
        const PosetGraph g = build_poset(engine, 2, 2, 2);
        if (g.maximal.size() != 1 || g.elements[g.maximal[0]] != Composition{2, 3, 3, 2}) return failed("maximum differs");
        return pass();
    });
    for (const auto& [a, n, m, expected] : std::vector<std::tuple<int, int, int, Composition>>{
             {2, 2, 3, {2, 3, 2, 3, 2}}, {1, 2, 3, {1, 2, 1, 2, 1}}}) {
        rec.check(to_string(expected) + " maximal in " + family(a, n, m) + " and a box diagonal", [&, a = a, n = n, m = m,
                                                                                                  expected = expected] {
            const int R = n + m;
            const int S = R * a - m + 1;
            if (box_diagonal(R, S) != expected) return failed("P = " + to_string(box_diagonal(R, S)));
            const PosetGraph g = build_poset(engine, a, n, m);
            const std::size_t idx = g.index_of(expected);
            if (std::find(g.maximal.begin(), g.maximal.end(), idx) == g.maximal.end()) return failed("not maximal");
            return pass("P(" + std::to_string(R) + "," + std::to_string(S) + ")");
        });
    }
    // Forms listed for the box diagonal of R((a+1)^n a^m), up to reversal.
    rec.check("box diagonal list", [] {
        std::size_t count = 0;
        for (int a = 1; a <= 3; ++a) {
            const int b = a + 1;
            std::vector<std::tuple<int, int, Composition>> cases;
            for (int m = 1; m <= 6; ++m) cases.emplace_back(1, m, cat({rep(a, m / 2), {b}, rep(a, (m + 1) / 2)}));
            for (int n = 1; n <= 6; ++n) cases.emplace_back(n, 1, cat({rep(b, n), {a}}));
            cases.emplace_back(2, 2, Composition{a, b, b, a});
            cases.emplace_back(2, 3, Composition{a, b, a, b, a});
            for (int n = 1; n <= 5; ++n) cases.emplace_back(n, 2, cat({{a}, rep(b, n), {a}}));
            for (int n = 1; n <= 3; ++n)
                for (int d = 1; d <= 3; ++d) {
                    Composition even = rep(a, d);
                    for (int i = 0; i < n; ++i) even = cat({even, {b}, rep(a, d)});
                    cases.emplace_back(n, d * (n + 1), even);
                }
            for (const auto& [n, m, form] : cases) {
                const int R = n + m;
                const Composition p = box_diagonal(R, R * a - m + 1);
                if (canonical(p) != canonical(form))
                    return failed("a=" + std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                                  to_string(p) + " vs " + to_string(form));
                ++count;
            }
        }
        return pass(std::to_string(count) + " forms");
    });
    return rec.finish();
}

// ---------------------------------------------------------------------------

Report verify_jensen(const SuiteOptions& options) {
    Recorder rec("jensen");
    const int r = options.jensen_range;
    rec.check("jensen identity grid", [&] {
        std::size_t count = 0;
        for (int x = -r; x <= r; ++x)
            for (int y = -r; y <= r; ++y)
                for (int v = 0; v <= options.jensen_max_v; ++v) {
                    if (!jensen_check(x, y, v))
                        return failed("x=" + std::to_string(x) + " y=" + std::to_string(y) + " v=" + std::to_string(v));
                    ++count;
                }
        return pass(std::to_string(count) + " triples");
    });
    rec.check("disjoint pairs against brute force", [] {
        for (int x = 0; x <= 12; ++x) {
            std::vector<std::int64_t> brute(static_cast<std::size_t>(x / 2 + 2), 0);
            // Bit i set: a pair starting at cell i.
            for (std::uint32_t mask = 0; mask < (1u << std::max(x - 1, 0)); ++mask) {
                if (mask & (mask << 1)) continue;
                ++brute[static_cast<std::size_t>(__builtin_popcount(mask))];
            }
            for (int k = 0; k <= x / 2 + 1; ++k) {
                const std::int64_t got = count_disjoint_pairs(x, k);
                const std::int64_t want = k < static_cast<int>(brute.size()) ? brute[static_cast<std::size_t>(k)] : 0;
                if (got != want || got != binomial_clamped(x - k, k))
                    return failed("x=" + std::to_string(x) + " k=" + std::to_string(k) + ": " + std::to_string(got));
            }
        }
        return pass();
    });
    rec.check("generalized binomials", [] {
        if (binomial_generalized(-1, 3) != -1) return failed("C(-1,3)");
        if (binomial_generalized(-2, 2) != 3) return failed("C(-2,2)");
        if (binomial_generalized(5, 2) != 10) return failed("C(5,2)");
        if (binomial_generalized(2, 5) != 0) return failed("C(2,5)");
        if (binomial_clamped(-3, 2) != 0) return failed("clamped C(-3,2)");
        return pass();
    });
    return rec.finish();
}

// ---------------------------------------------------------------------------

Report verify_oracles(Engine& engine, const SuiteOptions& options) {
    Recorder rec("oracles");
    const int N = options.max_cells;
    std::vector<Composition> all;
    for (int size = 1; size <= N; ++size)
        for (auto& c : compositions_of(size)) all.push_back(std::move(c));
    const auto in_size = [](int cap) { return " |alpha| <= " + std::to_string(cap); };

    std::map<Composition, SchurVector> lr;
    rec.check("lr expansions nonnegative with lex-largest coefficient 1," + in_size(N), [&] {
        for (const auto& alpha : all) {
            const SkewShape shape = ribbon_to_skew(alpha);
            SchurVector v = lr_expand(shape);
            if (!v.is_nonnegative()) return failed(to_string(alpha) + ": negative coefficient");
            const auto top = v.lex_largest();
            if (!top || top->first != lex_largest_content(shape) || top->second != 1)
                return failed(to_string(alpha) + ": leading term");
            lr.emplace(alpha, std::move(v));
        }
        return pass(std::to_string(all.size()) + " ribbons");
    });
    const auto expansion = [&](const Composition& alpha) {
        if (auto it = lr.find(alpha); it != lr.end()) return it->second;
        return lr_expand(ribbon_to_skew(alpha));
    };
    rec.check("reversal symmetry," + in_size(N), [&] {
        for (const auto& alpha : all)
            if (expansion(alpha) != expansion(reverse(alpha))) return failed(to_string(alpha));
        return pass();
    });
    rec.check("transpose symmetry," + in_size(options.max_cells_small), [&] {
        for (const auto& alpha : all) {
            if (alpha.size() > options.max_cells_small) continue;
            const SkewShape t = transpose(ribbon_to_skew(alpha));
            SchurVector conj;
            for (const auto& [p, c] : expansion(alpha)) conj.add(p.conjugate(), c);
            if (lr_expand(t) != conj) return failed(to_string(alpha));
            if (!as_ribbon(t)) return failed(to_string(alpha) + ": transpose is not a ribbon");
        }
        return pass();
    });
    rec.check("h_to_s of coarsening expansion equals lr," + in_size(N), [&] {
        for (const auto& alpha : all)
            if (h_to_s(h_expand_ribbon(alpha)) != expansion(alpha)) return failed(to_string(alpha));
        return pass();
    });
    rec.check("Jacobi-Trudi equals coarsening expansion," + in_size(N) + " rows <= " + std::to_string(options.jt_max_rows), [&] {
        std::size_t count = 0;
        for (const auto& alpha : all) {
            if (alpha.length() > options.jt_max_rows) continue;
            if (jt_h_expansion(ribbon_to_skew(alpha)) != h_expand_ribbon(alpha)) return failed(to_string(alpha));
            ++count;
        }
        return pass(std::to_string(count) + " ribbons");
    });
    rec.check("engine agrees with lr," + in_size(N), [&] {
        for (const auto& alpha : all)
            if (engine.ribbon_schur(alpha) != expansion(alpha)) return failed(to_string(alpha));
        return pass();
    });
    rec.check("product identity on " + std::to_string(options.product_pairs) + " random pairs," + in_size(N), [&] {
        std::mt19937_64 rng(options.seed);
        for (int trial = 0; trial < options.product_pairs; ++trial) {
            const int total = std::uniform_int_distribution<int>(2, N)(rng);
            const int left = std::uniform_int_distribution<int>(1, total - 1)(rng);
            const auto pick = [&](int size) {
                const auto choices = compositions_of(size);
                return choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
            };
            const Composition x = pick(left);
            const Composition y = pick(total - left);
            const SchurVector lhs = engine.product_expand(x, y);
            const SchurVector rhs = expansion(concat(x, y)) + expansion(near_concat(x, y));
            if (lhs != rhs) return failed(to_string(x) + " * " + to_string(y));
        }
        return pass("seed " + std::to_string(options.seed));
    });
    rec.check("standard fillings two ways," + in_size(N), [&] {
        for (const auto& alpha : all)
            if (syt_count(alpha) != syt_count_by_coarsenings(alpha)) return failed(to_string(alpha));
        return pass();
    });
    rec.check("moving a cell: restricted count equals lr difference," + in_size(N), [&] {
        std::size_t count = 0;
        for (const auto& alpha : all) {
            if (alpha.front() < 2) continue;
            for (std::size_t i = 2; i <= alpha.length(); ++i) {
                const Composition beta = move_cell(alpha, i);
                int rhs = 1 - static_cast<int>(i);
                for (std::size_t k = 2; k <= i; ++k) rhs += beta[k - 1];
                const auto cert = certified_move_inequality(alpha, static_cast<int>(i));
                if ((beta.front() >= rhs) != cert.has_value()) return failed(to_string(alpha) + " i=" + std::to_string(i));
                if (!cert) continue;
                if (cert->difference != expansion(beta) - expansion(alpha))
                    return failed(to_string(alpha) + " i=" + std::to_string(i) + ": " + show(cert->difference));
                ++count;
            }
        }
        return pass(std::to_string(count) + " instances");
    });
    rec.check("inclusion-exclusion of two moves," + in_size(N), [&] {
        std::size_t count = 0;
        for (const auto& alpha : all) {
            const std::size_t R = alpha.length();
            if (alpha.front() < 3) continue;
            for (std::size_t j = 3; j <= R; ++j) {
                for (std::size_t i = 2; i < j; ++i) {
                    const Composition mj = move_cell(alpha, j);
                    const Composition mi = move_cell(alpha, i);
                    const Composition beta = move_cell(mj, i);
                    int rhs = 1 - static_cast<int>(j);
                    for (std::size_t k = 2; k <= j; ++k) rhs += beta[k - 1];
                    if (beta.front() < rhs) continue;
                    const SchurVector lhs = expansion(beta) - expansion(mj) - expansion(mi) + expansion(alpha);
                    const SchurVector restricted = restricted_expand2(beta, static_cast<int>(i), static_cast<int>(j));
                    if (lhs != restricted || !restricted.is_nonnegative())
                        return failed(to_string(alpha) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                    ++count;
                }
            }
        }
        return pass(std::to_string(count) + " instances");
    });
    rec.check("coarsenings invariant under reversal," + in_size(N), [&] {
        for (const auto& alpha : all) {
            const auto c = coarsenings(alpha);
            if (c != coarsenings(reverse(alpha))) return failed(to_string(alpha));
            std::int64_t total = 0;
            for (const auto& [p, mult] : c) {
                if (p.size() != alpha.size()) return failed(to_string(alpha) + ": size");
                total += mult;
            }
            if (total != (std::int64_t{1} << (alpha.length() - 1))) return failed(to_string(alpha) + ": count");
        }
        return pass();
    });
    rec.check("box diagonal formula equals geometry, R,S <= " + std::to_string(options.box_max), [&] {
        for (int R = 1; R <= options.box_max; ++R)
            for (int S = 1; S <= options.box_max; ++S) {
                const Composition p = box_diagonal(R, S);
                if (p != box_diagonal_geometric(R, S) || !is_equitable(p) || static_cast<int>(p.length()) != R ||
                    p.size() != R + S - 1)
                    return failed("P(" + std::to_string(R) + "," + std::to_string(S) + ") = " + to_string(p));
            }
        return pass();
    });
    rec.check("box diagonal transpose, R,S <= " + std::to_string(options.box_transpose_max), [&] {
        for (int R = 1; R <= options.box_transpose_max; ++R)
            for (int S = 1; S <= options.box_transpose_max; ++S) {
                const auto t = transpose(ribbon_to_skew(box_diagonal(R, S)));
                const auto cells = t.cells();
                const auto want = ribbon_to_skew(box_diagonal(S, R)).cells();
                if (cells != want) return failed("P(" + std::to_string(R) + "," + std::to_string(S) + ")");
            }
        return pass();
    });
    return rec.finish();
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"chains", "ftom", "shortends", "smalls", "minimal", "maximal", "jensen", "oracles"};
    return names;
}

Report run_suite(Engine& engine, std::string_view name, const SuiteOptions& options) {
    if (name == "chains") return verify_chains(engine, options);
    if (name == "ftom") return verify_ftom_suite(options);
    if (name == "shortends") return verify_shortends(engine, options);
    if (name == "smalls") return verify_smalls(engine, options);
    if (name == "minimal") return verify_minimal_suite(engine, options);
    if (name == "maximal") return verify_maximal_corollaries(engine, options);
    if (name == "jensen") return verify_jensen(options);
    if (name == "oracles") return verify_oracles(engine, options);
    fail(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace equitab
