#include "equitab/order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "equitab/coarsening.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"
#include "equitab/lr.hpp"

namespace equitab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "Equal";
        case Verdict::Greater: return "Greater";
        case Verdict::Less: return "Less";
        case Verdict::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string to_string(FilterVerdict v) {
    return v == FilterVerdict::MayCompare ? "MayCompare" : "CannotBeGreater";
}

ComparisonResult classify(SchurVector difference) {
    ComparisonResult result{Verdict::Equal, std::nullopt, std::nullopt, {}};
    for (const auto& [p, c] : difference) {
        if (c > 0 && !result.witness_pos) result.witness_pos = Witness{p, c};
        if (c < 0 && !result.witness_neg) result.witness_neg = Witness{p, c};
    }
    if (result.witness_pos && result.witness_neg)
        result.verdict = Verdict::Incomparable;
    else if (result.witness_pos)
        result.verdict = Verdict::Greater;
    else if (result.witness_neg)
        result.verdict = Verdict::Less;
    result.difference = std::move(difference);
    return result;
}

ComparisonResult compare(Engine& engine, const Composition& alpha, const Composition& beta) {
    return classify(engine.ribbon_schur(alpha) - engine.ribbon_schur(beta));
}

std::vector<Composition> equitable_elements(int a, int n, int m, std::int64_t guard) {
    require(a >= 1 && n >= 0 && m >= 0, "equitable elements need a >= 1 and n, m >= 0");
    const std::int64_t arrangements = binomial_clamped(n + m, m);
    if (arrangements > guard)
        fail(ErrorKind::Resource, std::to_string(arrangements) + " arrangements exceed the poset guard of " +
                                      std::to_string(guard));
    std::vector<int> parts(static_cast<std::size_t>(m), a);
    parts.insert(parts.end(), static_cast<std::size_t>(n), a + 1);
    std::set<Composition> reps;
    do {
        reps.insert(canonical(Composition(parts)));
    } while (std::next_permutation(parts.begin(), parts.end()));
    return {reps.begin(), reps.end()};
}

namespace {

void check_same_family(const Composition& alpha, const Composition& beta, int a) {
    require(!alpha.empty() && !beta.empty(), "filters need nonempty ribbons");
    if (!(row_counts(alpha, a) == row_counts(beta, a)))
        fail(ErrorKind::InvalidArgument, "ribbons " + to_string(alpha) + " and " + to_string(beta) +
                                             " do not have the same numbers of long and short rows");
}

}  // namespace

FilterVerdict filter_short_ends(const Composition& alpha, const Composition& beta, int a) {
    check_same_family(alpha, beta, a);
    return short_ends(alpha, a) < short_ends(beta, a) ? FilterVerdict::CannotBeGreater : FilterVerdict::MayCompare;
}

FilterVerdict filter_quasi_profile(const Composition& alpha, const Composition& beta, int a) {
    check_same_family(alpha, beta, a);
    return lex_compare(quasi_profile(alpha, a), quasi_profile(beta, a)) > 0 ? FilterVerdict::CannotBeGreater
                                                                            : FilterVerdict::MayCompare;
}

std::optional<MoveCertificate> certified_move_inequality(const Composition& alpha, int i, int cell_guard) {
    require(i >= 1, "row index must be positive");
    const Composition beta = move_cell(alpha, static_cast<std::size_t>(i));
    int rhs = -i + 1;
    for (int k = 2; k <= i; ++k) rhs += beta[static_cast<std::size_t>(k - 1)];
    if (beta.front() < rhs) return std::nullopt;
    return MoveCertificate{beta, alpha, i, restricted_expand(beta, i, cell_guard)};
}

namespace {

std::vector<int> prefix_sums(const Composition& c) {
    std::vector<int> s{0};
    for (int p : c) s.push_back(s.back() + p);
    return s;
}

// Rows 1..L; unset entries are filled with the smallest value seen, and
// every row is shifted so that value becomes 0.
struct ShapeRows {
    std::vector<std::optional<int>> outer, inner;
    explicit ShapeRows(std::size_t rows) : outer(rows), inner(rows) {}
};

SkewShape finish(const ShapeRows& s, int shift, int pad) {
    std::vector<int> outer, inner;
    for (std::size_t r = 0; r < s.outer.size(); ++r) {
        outer.push_back(s.outer[r].value_or(pad) + shift);
        inner.push_back(s.inner[r].value_or(pad) + shift);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

bool is_ribbon(const SkewShape& s, const Composition& expected) {
    auto r = as_ribbon(s);
    return r && *r == expected;
}

}  // namespace

std::optional<ExchangeCertificate> certified_exchange_inequality(const Composition& delta, const Composition& gamma,
                                                                 int a, int a_prime) {
    require(a >= 1 && a_prime >= a, "row exchange needs 1 <= a <= a'");
    const Composition delta_rev = reverse(delta);
    const int d = static_cast<int>(delta.length());
    const int g = static_cast<int>(gamma.length());
    const std::vector<int> D = prefix_sums(delta_rev);
    const std::vector<int> G = prefix_sums(gamma);

    int case_number = 0;
    if (g >= d) {
        bool dominates = true;
        for (int i = 1; i <= d; ++i) dominates = dominates && D[static_cast<std::size_t>(i)] >= G[static_cast<std::size_t>(i)];
        if (dominates) case_number = 1;
    } else if (g > 0) {
        bool dominates = D[static_cast<std::size_t>(g)] > G[static_cast<std::size_t>(g)];
        for (int i = 1; i <= g - 1; ++i) dominates = dominates && D[static_cast<std::size_t>(i)] >= G[static_cast<std::size_t>(i)];
        if (dominates) case_number = 2;
    }
    if (case_number == 0) return std::nullopt;

    const int M = delta.size() - d;
    const auto L = static_cast<std::size_t>(std::max(d, g) + 1);
    ShapeRows first(L), second(L);
    auto at = [](std::vector<int> const& sums, int k) { return sums[static_cast<std::size_t>(k)]; };
    first.outer[0] = M + a_prime;
    for (int i = 2; i <= d + 1; ++i) first.outer[static_cast<std::size_t>(i - 1)] = M - at(D, i - 2) + (i - 1);
    for (int i = 1; i <= d + 1; ++i) first.inner[static_cast<std::size_t>(i - 1)] = M - at(D, i - 1) + (i - 1);
    second.outer[0] = M + a;
    for (int i = 2; i <= g + 1; ++i) second.outer[static_cast<std::size_t>(i - 1)] = M - at(G, i - 2) + (i - 1);
    for (int i = 1; i <= g + 1; ++i) second.inner[static_cast<std::size_t>(i - 1)] = M - at(G, i - 1) + (i - 1);
    if (case_number == 2) {
        for (int i = g + 2; i <= d + 1; ++i) {
            second.outer[static_cast<std::size_t>(i - 1)] = M - at(D, i - 2) + (i - 1);
            second.inner[static_cast<std::size_t>(i - 1)] = M - at(D, i - 2) + (i - 1);
        }
    }

    int pad = 0;
    for (const ShapeRows* s : {&first, &second})
        for (const auto* rows : {&s->outer, &s->inner})
            for (const auto& v : *rows)
                if (v) pad = std::min(pad, *v);
    const SkewShape lm = finish(first, -pad, pad);
    const SkewShape nr = finish(second, -pad, pad);
    const SkewShape uni = skew_union(lm, nr);
    const SkewShape inter = skew_intersection(lm, nr);

    const Composition a_prime_delta_rev = concat(Composition{a_prime}, delta_rev);
    const Composition a_gamma = concat(Composition{a}, gamma);
    if (!is_ribbon(lm, a_prime_delta_rev) || !is_ribbon(nr, a_gamma) ||
        !is_ribbon(uni, concat(Composition{a_prime}, gamma)) || !is_ribbon(inter, concat(Composition{a}, delta_rev)))
        throw std::logic_error("row exchange construction did not produce the expected ribbons");

    return ExchangeCertificate{concat(delta, concat(Composition{a, a_prime}, gamma)),
                               concat(delta, concat(Composition{a_prime, a}, gamma)),
                               case_number,
                               lm,
                               nr,
                               uni,
                               inter};
}

RaiseResult raise_to_short_ends(const Composition& beta, int a) {
    const RowCounts rc = row_counts(beta, a);
    require(rc.m >= 2, "raising to short ends needs at least two short rows");
    RaiseResult out{beta, {beta}, {}};
    Composition cur = beta;
    while (short_ends(cur, a) < 2) {
        if (cur.front() == a) {
            cur = reverse(cur);
            out.path.push_back(cur);
        }
        std::size_t k = 0;
        while (cur[k] == a + 1) ++k;
        const Composition delta(std::vector<int>(static_cast<std::size_t>(k - 1), a + 1));
        const Composition gamma(std::vector<int>(cur.begin() + static_cast<long>(k) + 1, cur.end()));
        auto cert = certified_exchange_inequality(delta, gamma, a, a + 1);
        if (!cert) throw std::logic_error("row exchange hypothesis failed while raising " + to_string(beta));
        cur = cert->greater;
        out.path.push_back(cur);
        out.steps.push_back(std::move(*cert));
    }
    out.result = cur;
    return out;
}

}  // namespace equitab
