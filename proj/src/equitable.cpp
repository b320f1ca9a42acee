#include "equitab/equitable.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "equitab/error.hpp"
#include "equitab/skew_shape.hpp"

namespace equitab {

namespace {

bool two_consecutive_values(const std::vector<int>& v, int& low) {
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    low = *mn;
    return *mx - *mn <= 1;
}

// Ceiling/floor of num/den for den > 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}
std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

// p/q with q > 0, compared exactly.
struct Rational {
    std::int64_t num;
    std::int64_t den;
    friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
    friend bool operator==(const Rational& x, const Rational& y) { return x.num * y.den == y.num * x.den; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
};

// Row lengths, bottom-up, of the ribbon with the given column lengths
// (left to right); adjacent columns share one row.
std::vector<int> rows_from_columns(const std::vector<int>& cols) {
    std::map<int, int> per_row;
    int start = 1;
    for (int len : cols) {
        for (int y = start; y < start + len; ++y) ++per_row[y];
        start += len - 1;
    }
    std::vector<int> out;
    for (auto& [y, count] : per_row) out.push_back(count);
    return out;
}

Composition top_down(std::vector<int> bottom_up) {
    std::reverse(bottom_up.begin(), bottom_up.end());
    return Composition(std::move(bottom_up));
}

}  // namespace

std::optional<EquitableParams> is_equitable(const Composition& alpha) {
    if (alpha.empty()) return std::nullopt;
    EquitableParams params{};
    if (!two_consecutive_values(alpha.vec(), params.a)) return std::nullopt;
    if (!two_consecutive_values(ribbon_column_lengths(alpha), params.b)) return std::nullopt;
    return params;
}

bool has_parts_in(const Composition& alpha, int a) {
    return std::all_of(alpha.begin(), alpha.end(), [a](int p) { return p == a || p == a + 1; });
}

RowCounts row_counts(const Composition& alpha, int a) {
    require(a >= 1, "short row length must be positive");
    require(has_parts_in(alpha, a), "ribbon " + to_string(alpha) + " has a part outside {a, a+1} for a = " + std::to_string(a));
    RowCounts rc{0, 0};
    for (int p : alpha) (p == a ? rc.m : rc.n)++;
    return rc;
}

int short_ends(const Composition& alpha, int a) {
    require(!alpha.empty(), "short_ends of the empty ribbon");
    row_counts(alpha, a);
    if (alpha.length() == 1) return alpha.front() == a ? 1 : 0;
    return (alpha.front() == a ? 1 : 0) + (alpha.back() == a ? 1 : 0);
}

Profile profile(const Composition& alpha, int a) {
    row_counts(alpha, a);
    Profile p;
    int run = 0;
    for (int part : alpha) {
        if (part == a) {
            ++run;
        } else {
            p.entries.push_back(run);
            run = 0;
        }
    }
    p.entries.push_back(run);
    return p;
}

QuasiProfile quasi_profile(const Profile& p) {
    QuasiProfile q;
    for (int e : p.entries) {
        if (static_cast<std::size_t>(e) >= q.counts.size()) q.counts.resize(static_cast<std::size_t>(e) + 1, 0);
        ++q.counts[static_cast<std::size_t>(e)];
    }
    while (!q.counts.empty() && q.counts.back() == 0) q.counts.pop_back();
    return q;
}

QuasiProfile quasi_profile(const Composition& alpha, int a) { return quasi_profile(profile(alpha, a)); }

std::strong_ordering lex_compare(const QuasiProfile& lhs, const QuasiProfile& rhs) {
    const std::size_t n = std::max(lhs.counts.size(), rhs.counts.size());
    for (std::size_t j = 0; j < n; ++j)
        if (auto c = lhs[j] <=> rhs[j]; c != 0) return c;
    return std::strong_ordering::equal;
}

Composition box_diagonal(int R, int S) {
    require(R >= 1 && S >= 1, "box diagonal needs R, S >= 1");
    if (S >= R) {
        // S/R = a - eps with 1 - eps = d/R; long rows (counted from the
        // bottom) sit at ceil(t R / d) for integer t, within 1..R-1.
        const int a = static_cast<int>(ceil_div(S, R));
        const int d = S - (a - 1) * R;
        std::vector<int> bottom_up(static_cast<std::size_t>(R), a);
        for (std::int64_t t = 1;; ++t) {
            const std::int64_t i = ceil_div(t * R, d);
            if (i > R - 1) break;
            bottom_up[static_cast<std::size_t>(i - 1)] = a + 1;
        }
        return top_down(std::move(bottom_up));
    }
    // R/S = b - eps with 1 - eps = d/S; long columns at floor(t S / d) + 1
    // within 2..S, first column of length b.
    const int b = static_cast<int>(ceil_div(R, S));
    const int d = R - (b - 1) * S;
    std::vector<int> cols(static_cast<std::size_t>(S), b);
    for (std::int64_t t = 1;; ++t) {
        const std::int64_t j = floor_div(t * S, d) + 1;
        if (j > S) break;
        if (j >= 2) cols[static_cast<std::size_t>(j - 1)] = b + 1;
    }
    return top_down(rows_from_columns(cols));
}

Composition box_diagonal_geometric(int R, int S) {
    require(R >= 1 && S >= 1, "box diagonal needs R, S >= 1");
    // Cell (x, y) spans [x-1, x] x [y-1, y] with rows counted from the bottom.
    std::vector<int> bottom_up(static_cast<std::size_t>(R), 0);
    for (int y = 1; y <= R; ++y) {
        for (int x = 1; x <= S; ++x) {
            const Rational left{static_cast<std::int64_t>(R) * (x - 1), S};
            const Rational right{static_cast<std::int64_t>(R) * x, S};
            const Rational bottom{y - 1, 1};
            const Rational top{y, 1};
            const bool interior = left < top && bottom < right;
            const bool top_left_corner = left == top;
            if (interior || top_left_corner) ++bottom_up[static_cast<std::size_t>(y - 1)];
        }
    }
    return top_down(std::move(bottom_up));
}

}  // namespace equitab
