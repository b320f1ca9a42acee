#include "equitab/coarsening.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "equitab/checked.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"

namespace equitab {

CoarseningMultiset coarsenings(const Composition& alpha) {
    CoarseningMultiset out;
    if (alpha.empty()) {
        out[Partition{}] = 1;
        return out;
    }
    if (alpha.length() > kMaxCoarseningLength)
        fail(ErrorKind::Resource, "coarsenings: length " + std::to_string(alpha.length()) + " exceeds " +
                                      std::to_string(kMaxCoarseningLength));
    const std::size_t gaps = alpha.length() - 1;
    std::vector<int> parts;
    parts.reserve(alpha.length());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << gaps); ++mask) {
        parts.clear();
        int block = alpha[0];
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (std::uint32_t{1} << g)) {
                block += alpha[g + 1];
            } else {
                parts.push_back(block);
                block = alpha[g + 1];
            }
        }
        parts.push_back(block);
        ++out[Partition::sorted(parts)];
    }
    return out;
}

Partition lambda_k(int a, int n, int m, int k) {
    require(a >= 1 && n >= 0 && k >= 0 && m >= 2 * k, "lambda_k needs a >= 1, n >= 0 and m >= 2k");
    std::vector<int> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(k), 2 * a);
    parts.insert(parts.end(), static_cast<std::size_t>(n), a + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(m - 2 * k), a);
    return Partition::sorted(std::move(parts));
}

std::int64_t pair_placement_count(const Composition& alpha, int a, int k) {
    require(k >= 0, "pair count needs k >= 0");
    const Profile p = profile(alpha, a);
    // ways[j] = placements of j pairs among the runs seen so far.
    std::vector<std::int64_t> ways(static_cast<std::size_t>(k) + 1, 0);
    ways[0] = 1;
    for (int run : p.entries) {
        std::vector<std::int64_t> next(ways.size(), 0);
        for (std::size_t j = 0; j < ways.size(); ++j) {
            if (ways[j] == 0) continue;
            for (std::size_t e = 0; j + e < ways.size(); ++e) {
                const std::int64_t c = count_disjoint_pairs(run, static_cast<std::int64_t>(e));
                if (c == 0) break;
                next[j + e] = checked_add(next[j + e], checked_mul(ways[j], c));
            }
        }
        ways = std::move(next);
    }
    return ways.back();
}

namespace {

// Counts ordered splittings of alpha[pos..] into blocks whose sums use up
// the remaining parts of lambda exactly.
std::int64_t merge_search(const Composition& alpha, std::size_t pos, std::map<int, int>& remaining) {
    if (pos == alpha.length()) return 1;
    std::int64_t total = 0;
    int block = 0;
    const int largest = remaining.empty() ? 0 : remaining.rbegin()->first;
    for (std::size_t end = pos; end < alpha.length(); ++end) {
        block += alpha[end];
        if (block > largest) break;
        auto it = remaining.find(block);
        if (it == remaining.end() || it->second == 0) continue;
        --it->second;
        total = checked_add(total, merge_search(alpha, end + 1, remaining));
        ++it->second;
    }
    return total;
}

}  // namespace

std::int64_t multiplicity(const Composition& alpha, const Partition& lambda) {
    if (alpha.size() != lambda.size()) return 0;
    if (alpha.empty()) return 1;
    if (alpha.length() <= kMaxCoarseningLength) {
        std::map<int, int> remaining;
        for (int p : lambda) ++remaining[p];
        return merge_search(alpha, 0, remaining);
    }
    const int a = *std::min_element(alpha.begin(), alpha.end());
    if (has_parts_in(alpha, a)) {
        const RowCounts rc = row_counts(alpha, a);
        for (int k = 0; 2 * k <= rc.m; ++k)
            if (lambda_k(a, rc.n, rc.m, k) == lambda) return pair_placement_count(alpha, a, k);
    }
    fail(ErrorKind::Resource, "multiplicity: composition of length " + std::to_string(alpha.length()) +
                                  " is too long for a direct merge search");
}

std::int64_t binomial_clamped(std::int64_t x, std::int64_t k) {
    if (x < 0 || k < 0 || k > x) return 0;
    return binomial_generalized(x, std::min(k, x - k));
}

std::int64_t binomial_generalized(std::int64_t x, std::int64_t k) {
    if (k < 0) return 0;
    // C(x, i+1) = C(x, i) (x - i) / (i + 1) stays integral at every step.
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < k; ++i) result = checked_mul(result, x - i) / (i + 1);
    return result;
}

std::int64_t count_disjoint_pairs(std::int64_t x, std::int64_t k) { return binomial_clamped(x - k, k); }

bool jensen_check(std::int64_t x, std::int64_t y, std::int64_t v) {
    std::int64_t lhs = 0, rhs = 0;
    for (std::int64_t u = 0; u <= v; ++u) {
        lhs = checked_add(lhs, checked_mul(binomial_generalized(x - u, u), binomial_generalized(y - (v - u), v - u)));
        const std::int64_t term = binomial_generalized(x + y - v - u, v - u);
        rhs = checked_add(rhs, u % 2 == 0 ? term : -term);
    }
    return lhs == rhs;
}

}  // namespace equitab
