#include "equitab/poset.hpp"

#include <algorithm>
#include <numeric>

#include "equitab/error.hpp"
#include "parallel.hpp"

namespace equitab {

bool PosetGraph::greater(std::size_t i, std::size_t j) const {
    return std::binary_search(relations.begin(), relations.end(), std::pair{i, j});
}

std::vector<Composition> PosetGraph::chain() const {
    if (!is_chain) return {};
    std::vector<std::size_t> order(elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(elements.size(), 0);
    for (auto [i, j] : relations) ++below[i];
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] > below[y]; });
    std::vector<Composition> out;
    for (std::size_t i : order) out.push_back(elements[i]);
    return out;
}

std::size_t PosetGraph::index_of(const Composition& alpha) const {
    const Composition key = canonical(alpha);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == key) return i;
        for (const auto& alias : aliases[i])
            if (alias == key) return i;
    }
    fail(ErrorKind::InvalidArgument, "ribbon " + to_string(alpha) + " is not an element of the poset");
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& rel) {
    const std::size_t n = rel.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k) direct = !(rel[i][k] && rel[k][j]);
            if (direct) covers.emplace_back(i, j);
        }
    return covers;
}

namespace {

struct PairOutcome {
    Verdict verdict = Verdict::Incomparable;
    bool pruned = false;
    bool cannot_ij_se = false, cannot_ij_q = false, cannot_ji_se = false, cannot_ji_q = false;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

PosetGraph build_poset(Engine& engine, int a, int n, int m, PosetMode mode) {
    const std::vector<Composition> reps = equitable_elements(a, n, m, engine.config().poset_guard);
    const std::size_t count = reps.size();
    const unsigned threads = engine.thread_count();

    std::vector<SchurVector> expansions(count);
    detail::parallel_for(count, threads, [&](std::size_t i) { expansions[i] = engine.ribbon_schur(reps[i]); });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    std::vector<PairOutcome> outcomes(pairs.size());
    detail::parallel_for(pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        PairOutcome& out = outcomes[p];
        out.cannot_ij_se = filter_short_ends(reps[i], reps[j], a) == FilterVerdict::CannotBeGreater;
        out.cannot_ij_q = filter_quasi_profile(reps[i], reps[j], a) == FilterVerdict::CannotBeGreater;
        out.cannot_ji_se = filter_short_ends(reps[j], reps[i], a) == FilterVerdict::CannotBeGreater;
        out.cannot_ji_q = filter_quasi_profile(reps[j], reps[i], a) == FilterVerdict::CannotBeGreater;
        if (mode == PosetMode::Fast && (out.cannot_ij_se || out.cannot_ij_q) && (out.cannot_ji_se || out.cannot_ji_q)) {
            out.pruned = true;
            out.verdict = Verdict::Incomparable;
            return;
        }
        out.verdict = classify(expansions[i] - expansions[j]).verdict;
    });

    PosetGraph g;
    g.a = a;
    g.n = n;
    g.m = m;

    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const PairOutcome& out = outcomes[p];
        if (out.pruned) {
            ++g.pairs_pruned;
            continue;
        }
        ++g.expansions_compared;
        const bool i_ge_j = out.verdict == Verdict::Greater || out.verdict == Verdict::Equal;
        const bool j_ge_i = out.verdict == Verdict::Less || out.verdict == Verdict::Equal;
        if (i_ge_j && out.cannot_ij_se) g.filter_violations.push_back({reps[i], reps[j], "short-ends"});
        if (i_ge_j && out.cannot_ij_q) g.filter_violations.push_back({reps[i], reps[j], "quasi-profile"});
        if (j_ge_i && out.cannot_ji_se) g.filter_violations.push_back({reps[j], reps[i], "short-ends"});
        if (j_ge_i && out.cannot_ji_q) g.filter_violations.push_back({reps[j], reps[i], "quasi-profile"});
        if (out.verdict == Verdict::Equal) {
            const std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
            parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    }

    // Classes keyed by their lexicographically least member.
    std::vector<std::size_t> class_of(count);
    std::vector<std::size_t> class_rep;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t root = find_root(parent, i);
        if (root == i) {
            class_of[i] = class_rep.size();
            class_rep.push_back(i);
            g.elements.push_back(reps[i]);
            g.aliases.emplace_back();
        } else {
            class_of[i] = class_of[root];
            g.aliases[class_of[root]].push_back(reps[i]);
        }
    }

    const std::size_t k = class_rep.size();
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const std::size_t ci = class_of[i], cj = class_of[j];
        if (ci == cj) continue;
        if (outcomes[p].verdict == Verdict::Greater) rel[ci][cj] = true;
        if (outcomes[p].verdict == Verdict::Less) rel[cj][ci] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (rel[i][j]) g.relations.emplace_back(i, j);
    g.covers = transitive_reduction(rel);
    for (std::size_t i = 0; i < k; ++i) {
        bool has_above = false, has_below = false;
        for (std::size_t j = 0; j < k; ++j) {
            has_above = has_above || rel[j][i];
            has_below = has_below || rel[i][j];
        }
        if (!has_above) g.maximal.push_back(i);
        if (!has_below) g.minimal.push_back(i);
    }
    g.is_chain = g.relations.size() == k * (k - 1) / 2;
    return g;
}

bool is_consistent(const PosetGraph& g) {
    const std::size_t k = g.elements.size();
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (auto [i, j] : g.relations) {
        if (i >= k || j >= k || i == j) return false;
        rel[i][j] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (rel[i][j] && rel[j][i]) return false;
            for (std::size_t l = 0; l < k; ++l)
                if (rel[i][j] && rel[j][l] && !rel[i][l]) return false;
        }
    // The transitive closure of the covers must give back the relations.
    std::vector<std::vector<bool>> closure(k, std::vector<bool>(k, false));
    for (auto [i, j] : g.covers) closure[i][j] = true;
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (closure[i][l] && closure[l][j]) closure[i][j] = true;
    return closure == rel;
}

}  // namespace equitab
