#include "equitab/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "equitab/checked.hpp"
#include "equitab/coarsening.hpp"
#include "equitab/error.hpp"
#include "equitab/lr.hpp"

namespace equitab {

HVector h_expand_ribbon(const Composition& alpha) {
    HVector out;
    const auto parity = static_cast<std::int64_t>(alpha.length() % 2);
    for (const auto& [lambda, mult] : coarsenings(alpha)) {
        const bool negative = (parity + static_cast<std::int64_t>(lambda.length() % 2)) % 2 == 1;
        out.add(lambda, negative ? -mult : mult);
    }
    return out;
}

HVector jt_h_expansion(const SkewShape& shape) {
    const std::size_t n = static_cast<std::size_t>(shape.rows());
    if (n > kMaxJacobiTrudiRows)
        fail(ErrorKind::Resource, "Jacobi-Trudi expansion limited to " + std::to_string(kMaxJacobiTrudiRows) + " rows");
    const Partition& lambda = shape.outer();
    const Partition& mu = shape.inner();
    HVector out;
    std::vector<bool> used(n, false);
    std::vector<int> indices;
    // lambda_r - r is strictly decreasing, so column j is usable exactly by
    // rows 0..last_row[j].
    std::vector<int> last_row(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r)
            if (lambda.part(r) - mu.part(j) - static_cast<int>(r) + static_cast<int>(j) >= 0) last_row[j] = static_cast<int>(r);
    std::vector<std::size_t> by_deadline(n);
    for (std::size_t j = 0; j < n; ++j) by_deadline[j] = j;
    std::stable_sort(by_deadline.begin(), by_deadline.end(), [&](std::size_t x, std::size_t y) { return last_row[x] < last_row[y]; });
    // Rows from..n-1 can still be matched to the unused columns.
    const auto completable = [&](std::size_t from) {
        int k = 0;
        for (std::size_t j : by_deadline) {
            if (used[j]) continue;
            if (last_row[j] < static_cast<int>(from) + k) return false;
            ++k;
        }
        return true;
    };
    // Row i picks column sigma(i); the sign is tracked by counting inversions
    // against columns already used.
    std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int sign) {
        if (i == n) {
            std::vector<int> parts;
            for (int h : indices)
                if (h > 0) parts.push_back(h);
            out.add(Partition::sorted(std::move(parts)), sign);
            return;
        }
        int larger_used = 0;
        for (std::size_t j = n; j-- > 0;) {
            if (used[j]) {
                ++larger_used;
                continue;
            }
            const int h = lambda.part(i) - mu.part(j) - static_cast<int>(i) + static_cast<int>(j);
            if (h < 0) continue;
            used[j] = true;
            if (completable(i + 1)) {
                indices.push_back(h);
                dfs(i + 1, larger_used % 2 == 0 ? sign : -sign);
                indices.pop_back();
            }
            used[j] = false;
        }
    };
    if (completable(0)) dfs(0, 1);
    return out;
}

SchurVector pieri(const Partition& mu, int k) {
    SchurVector out;
    const std::size_t len = mu.length();
    std::vector<int> lambda(len + 1, 0);
    // lambda_1 >= mu_1 freely; lambda_i in [mu_i, mu_{i-1}] below.
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
        if (i == len + 1) {
            if (left == 0) out.add(Partition(lambda), 1);
            return;
        }
        const int base = mu.part(i);
        const int room = i == 0 ? left : std::min(left, mu.part(i - 1) - base);
        for (int add = room; add >= 0; --add) {
            lambda[i] = base + add;
            fill(i + 1, left - add);
        }
    };
    fill(0, k);
    return out;
}

namespace {

// s-expansion of h_lambda, shared across calls.
SchurVector h_basis_to_schur(const Partition& lambda) {
    static std::shared_mutex mutex;
    static std::map<Partition, SchurVector> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    SchurVector result;
    if (lambda.empty()) {
        result.add(Partition{}, 1);
    } else {
        std::vector<int> prefix(lambda.begin(), lambda.end() - 1);
        for (const auto& [mu, c] : h_basis_to_schur(Partition(std::move(prefix))))
            result.add_scaled(pieri(mu, lambda.vec().back()), c);
    }
    std::unique_lock lock(mutex);
    return cache.emplace(lambda, std::move(result)).first->second;
}

}  // namespace

SchurVector h_to_s(const HVector& v, int cell_guard) {
    SchurVector out;
    for (const auto& [lambda, c] : v) {
        if (lambda.size() > cell_guard)
            fail(ErrorKind::Resource, "h_to_s: term of size " + std::to_string(lambda.size()) +
                                          " above the guard of " + std::to_string(cell_guard));
        out.add_scaled(h_basis_to_schur(lambda), c);
    }
    return out;
}

namespace {

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

void check_syt_guard(const Composition& alpha) {
    if (alpha.size() > kMaxSytCells)
        fail(ErrorKind::Resource, "syt_count limited to " + std::to_string(kMaxSytCells) + " cells");
}

}  // namespace

std::int64_t hook_length_count(const Partition& lambda) {
    if (lambda.size() > kMaxSytCells)
        fail(ErrorKind::Resource, "hook length count limited to " + std::to_string(kMaxSytCells) + " cells");
    const Partition conj = lambda.conjugate();
    std::int64_t hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks = checked_mul(hooks, (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1);
    return factorial(lambda.size()) / hooks;
}

std::int64_t syt_count(const Composition& alpha) {
    check_syt_guard(alpha);
    std::int64_t total = 0;
    for (const auto& [nu, c] : lr_expand(ribbon_to_skew(alpha)))
        total = checked_add(total, checked_mul(c, hook_length_count(nu)));
    return total;
}

std::int64_t syt_count_by_coarsenings(const Composition& alpha) {
    check_syt_guard(alpha);
    const std::int64_t n_fact = factorial(alpha.size());
    std::int64_t total = 0;
    for (const auto& [lambda, mult] : coarsenings(alpha)) {
        std::int64_t denom = 1;
        for (int p : lambda) denom = checked_mul(denom, factorial(p));
        const std::int64_t term = checked_mul(mult, n_fact / denom);
        const bool negative = (alpha.length() - lambda.length()) % 2 == 1;
        total = checked_add(total, negative ? -term : term);
    }
    return total;
}

}  // namespace equitab
