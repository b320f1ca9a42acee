#include "equitab/lr.hpp"

#include <algorithm>
#include <map>

#include "equitab/checked.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"

namespace equitab {

LRTableau::LRTableau(SkewShape shape) : shape_(std::move(shape)) {
    std::size_t offset = 0;
    for (int r = 1; r <= shape_.rows(); ++r) {
        row_offset_.push_back(offset);
        offset += static_cast<std::size_t>(std::max(0, shape_.row_last(r) - shape_.row_first(r) + 1));
    }
    entries_.assign(offset, 0);
}

LRTableau::LRTableau(SkewShape shape, const std::vector<std::vector<int>>& rows) : LRTableau(std::move(shape)) {
    require(rows.size() == static_cast<std::size_t>(shape_.rows()), "tableau row count does not match its shape");
    for (int r = 1; r <= shape_.rows(); ++r) {
        const auto& row = rows[static_cast<std::size_t>(r - 1)];
        require(static_cast<int>(row.size()) == std::max(0, shape_.row_last(r) - shape_.row_first(r) + 1),
                "tableau row length does not match its shape");
        for (std::size_t k = 0; k < row.size(); ++k) set(r, shape_.row_first(r) + static_cast<int>(k), row[k]);
    }
}

std::size_t LRTableau::index(int row, int col) const {
    require(shape_.contains(row, col), "cell outside the tableau shape");
    return row_offset_[static_cast<std::size_t>(row - 1)] + static_cast<std::size_t>(shape_.row_last(row) - col);
}

int LRTableau::at(int row, int col) const { return entries_[index(row, col)]; }
void LRTableau::set(int row, int col, int value) { entries_[index(row, col)] = value; }

Partition LRTableau::content() const {
    std::vector<int> counts;
    for (int v : entries_) {
        if (v < 1) return {};
        if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v - 1)];
    }
    return Partition::sorted(std::move(counts));
}

bool LRTableau::is_lr() const {
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = shape_.row_first(r); c <= shape_.row_last(r); ++c) {
            const int v = at(r, c);
            if (v < 1) return false;
            if (shape_.contains(r, c + 1) && at(r, c + 1) < v) return false;
            if (shape_.contains(r - 1, c) && at(r - 1, c) >= v) return false;
        }
    }
    std::vector<int> counts(entries_.size() + 2, 0);
    for (int v : entries_) {
        if (static_cast<std::size_t>(v) >= counts.size()) return false;
        ++counts[static_cast<std::size_t>(v)];
        if (v >= 2 && counts[static_cast<std::size_t>(v)] > counts[static_cast<std::size_t>(v - 1)]) return false;
    }
    return true;
}

namespace {

// Depth-first fill in reading order. Row weakness bounds an entry by its
// right neighbour, column strictness by the entry above, and the lattice
// condition is enforced on every prefix.
class LRSearch {
public:
    LRSearch(const SkewShape& shape, const std::optional<Partition>& content,
             const std::function<void(const LRTableau&)>& visit)
        : tableau_(shape), visit_(visit) {
        const std::size_t n = tableau_.reading_word().size();
        right_.assign(n, -1);
        above_.assign(n, -1);
        std::size_t k = 0;
        std::map<std::pair<int, int>, std::size_t> where;
        for (int r = 1; r <= shape.rows(); ++r)
            for (int c = shape.row_last(r); c >= shape.row_first(r); --c) where[{r, c}] = k++;
        for (const auto& [rc, idx] : where) {
            auto [r, c] = rc;
            if (shape.contains(r, c + 1)) right_[idx] = static_cast<long>(where.at({r, c + 1}));
            if (shape.contains(r - 1, c)) above_[idx] = static_cast<long>(where.at({r - 1, c}));
        }
        counts_.assign(n + 2, 0);
        if (content) {
            limit_.assign(n + 2, 0);
            for (std::size_t i = 0; i < content->length(); ++i) limit_[i + 1] = (*content)[i];
        }
    }

    void run() { dfs(0, 0); }

private:
    void dfs(std::size_t k, int max_value) {
        auto word = tableau_.reading_word();
        if (k == word.size()) {
            if (!limit_.empty() && counts_ != limit_) return;
            visit_(tableau_);
            return;
        }
        int hi = max_value + 1;
        if (right_[k] >= 0) hi = std::min(hi, word[static_cast<std::size_t>(right_[k])]);
        const int lo = above_[k] >= 0 ? word[static_cast<std::size_t>(above_[k])] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (v >= 2 && counts_[uv] + 1 > counts_[uv - 1]) continue;
            if (!limit_.empty() && counts_[uv] >= limit_[uv]) continue;
            word[k] = v;
            ++counts_[uv];
            dfs(k + 1, std::max(max_value, v));
            --counts_[uv];
        }
        word[k] = 0;
    }

    LRTableau tableau_;
    const std::function<void(const LRTableau&)>& visit_;
    std::vector<long> right_;
    std::vector<long> above_;
    std::vector<int> counts_;
    std::vector<int> limit_;
};

void check_guard(const SkewShape& shape, int cell_guard) {
    if (shape.cell_count() > cell_guard)
        fail(ErrorKind::Resource, "shape " + to_string(shape) + " has " + std::to_string(shape.cell_count()) +
                                      " cells, above the guard of " + std::to_string(cell_guard));
}

}  // namespace

void for_each_lr_tableau(const SkewShape& shape, const std::function<void(const LRTableau&)>& visit,
                         const std::optional<Partition>& content, int cell_guard) {
    check_guard(shape, cell_guard);
    if (content && content->size() != shape.cell_count()) return;
    LRSearch(shape, content, visit).run();
}

SchurVector lr_expand(const SkewShape& shape, int cell_guard) {
    std::map<std::vector<int>, std::int64_t> tally;
    std::vector<int> counts;
    for_each_lr_tableau(
        shape,
        [&](const LRTableau& t) {
            counts.clear();
            for (int v : t.reading_word()) {
                if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
                ++counts[static_cast<std::size_t>(v - 1)];
            }
            auto& slot = tally[counts];
            slot = checked_add(slot, 1);
        },
        std::nullopt, cell_guard);
    SchurVector out;
    for (auto& [content, c] : tally) out.add(Partition(content), c);
    return out;
}

Partition lex_largest_content(const SkewShape& shape) {
    return Partition::sorted(shape.column_lengths()).conjugate();
}

bool is_row_restricted(const LRTableau& t, int i) {
    const SkewShape& s = t.shape();
    const int rows = s.rows();
    require(i >= 2 && i <= rows, "restricted row index must satisfy 2 <= i <= R");
    const int i1 = s.row_first(i);
    if (t.at(i, i1) != 1) return true;
    if (i > rows - 1) return false;
    require(s.contains(i, i1 + 1) && s.contains(i + 1, i1), "row " + std::to_string(i) +
                                                                " needs at least two cells for the restriction");
    return t.at(i, i1 + 1) >= t.at(i + 1, i1);
}

namespace {

void check_restricted_rows(const Composition& beta, std::initializer_list<int> rows) {
    const int len = static_cast<int>(beta.length());
    for (int i : rows) {
        require(i >= 2 && i <= len, "restricted row index " + std::to_string(i) + " outside 2.." + std::to_string(len));
        require(i == len || beta[static_cast<std::size_t>(i - 1)] >= 2,
                "restricted row " + std::to_string(i) + " needs at least two cells");
    }
}

template <class Pred>
std::int64_t count_if_lr(const Composition& beta, const Partition& nu, int cell_guard, Pred pred) {
    std::int64_t total = 0;
    for_each_lr_tableau(
        ribbon_to_skew(beta), [&](const LRTableau& t) { if (pred(t)) total = checked_add(total, 1); }, nu,
        cell_guard);
    return total;
}

template <class Pred>
SchurVector expand_if_lr(const Composition& beta, int cell_guard, Pred pred) {
    SchurVector out;
    for_each_lr_tableau(
        ribbon_to_skew(beta), [&](const LRTableau& t) { if (pred(t)) out.add(t.content(), 1); }, std::nullopt,
        cell_guard);
    return out;
}

}  // namespace

std::int64_t restricted_count(const Composition& beta, int i, const Partition& nu, int cell_guard) {
    check_restricted_rows(beta, {i});
    return count_if_lr(beta, nu, cell_guard, [i](const LRTableau& t) { return is_row_restricted(t, i); });
}

std::int64_t restricted_count2(const Composition& beta, int i, int j, const Partition& nu, int cell_guard) {
    require(i < j, "restricted rows must satisfy i < j");
    check_restricted_rows(beta, {i, j});
    return count_if_lr(beta, nu, cell_guard,
                       [i, j](const LRTableau& t) { return is_row_restricted(t, i) && is_row_restricted(t, j); });
}

SchurVector restricted_expand(const Composition& beta, int i, int cell_guard) {
    check_restricted_rows(beta, {i});
    return expand_if_lr(beta, cell_guard, [i](const LRTableau& t) { return is_row_restricted(t, i); });
}

SchurVector restricted_expand2(const Composition& beta, int i, int j, int cell_guard) {
    require(i < j, "restricted rows must satisfy i < j");
    check_restricted_rows(beta, {i, j});
    return expand_if_lr(beta, cell_guard,
                        [i, j](const LRTableau& t) { return is_row_restricted(t, i) && is_row_restricted(t, j); });
}

bool is_comfortable(const LRTableau& t, int a) {
    const SkewShape& s = t.shape();
    const int rows = s.rows();
    for (int r = 1; r <= rows; ++r) {
        if (s.row_last(r) - s.row_first(r) + 1 != a + 1) continue;
        int ones = 0;
        for (int c = s.row_first(r); c <= s.row_last(r); ++c) ones += t.at(r, c) == 1;
        const bool intermediate = r > 1 && r < rows;
        if (ones < (intermediate ? 2 : 1)) return false;
    }
    return true;
}

Partition comfortable_content(const Composition& alpha, int a) {
    const RowCounts rc = row_counts(alpha, a);
    const int rows = static_cast<int>(alpha.length());
    return Partition({a * rows + rc.n - (a + rows - 2), a + rows - 2});
}

ComfortableSplit comfortable_split(const Composition& alpha, int a, const Partition& nu, int cell_guard) {
    require(a >= 2, "comfortable tableaux need a short row length of at least 2");
    require(!alpha.empty(), "comfortable tableaux need a nonempty ribbon");
    row_counts(alpha, a);
    ComfortableSplit split{0, 0};
    for_each_lr_tableau(
        ribbon_to_skew(alpha),
        [&](const LRTableau& t) {
            auto& slot = is_comfortable(t, a) ? split.comfortable : split.uncomfortable;
            slot = checked_add(slot, 1);
        },
        nu, cell_guard);
    return split;
}

}  // namespace equitab
