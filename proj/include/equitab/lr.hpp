#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "equitab/basis_vector.hpp"
#include "equitab/skew_shape.hpp"

namespace equitab {

inline constexpr int kDefaultLrCellGuard = 64;

/// A filling of a skew shape. Entries are stored in reading order: rows top
/// to bottom, each row right to left.
class LRTableau {
public:
    explicit LRTableau(SkewShape shape);
    /// Builds a filling from rows given left to right.
    LRTableau(SkewShape shape, const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const noexcept { return shape_; }
    int at(int row, int col) const;
    void set(int row, int col, int value);
    std::span<const int> reading_word() const noexcept { return entries_; }
    std::span<int> reading_word() noexcept { return entries_; }

    Partition content() const;
    /// Semistandard with a lattice reading word.
    bool is_lr() const;

private:
    std::size_t index(int row, int col) const;

    SkewShape shape_;
    std::vector<std::size_t> row_offset_;
    std::vector<int> entries_;
};

/// Calls visit once per LR tableau of the given shape, optionally restricted
/// to one content. The tableau passed to visit is reused between calls.
/// Throws Resource when the shape has more than cell_guard cells.
void for_each_lr_tableau(const SkewShape& shape, const std::function<void(const LRTableau&)>& visit,
                         const std::optional<Partition>& content = std::nullopt,
                         int cell_guard = kDefaultLrCellGuard);

/// s_{shape} in the Schur basis: coefficient of s_nu counts LR tableaux of
/// content nu.
SchurVector lr_expand(const SkewShape& shape, int cell_guard = kDefaultLrCellGuard);

/// Content of the filling that puts i in the i-th cell of every column.
Partition lex_largest_content(const SkewShape& shape);

/// Row-i restriction for a tableau of ribbon shape with R rows: if the first
/// cell of row i holds 1, then i <= R-1 and the cell to its right holds at
/// least the cell below it.
bool is_row_restricted(const LRTableau& t, int i);

/// c'_{beta,i,nu} and c'_{beta,i,j,nu}.
std::int64_t restricted_count(const Composition& beta, int i, const Partition& nu,
                              int cell_guard = kDefaultLrCellGuard);
std::int64_t restricted_count2(const Composition& beta, int i, int j, const Partition& nu,
                               int cell_guard = kDefaultLrCellGuard);
/// sum_nu c'_{beta,i,nu} s_nu and sum_nu c'_{beta,i,j,nu} s_nu.
SchurVector restricted_expand(const Composition& beta, int i, int cell_guard = kDefaultLrCellGuard);
SchurVector restricted_expand2(const Composition& beta, int i, int j, int cell_guard = kDefaultLrCellGuard);

/// Every long row contains a 1 and every long intermediate row two 1's.
bool is_comfortable(const LRTableau& t, int a);

/// (aR + n - (a + R - 2), a + R - 2) for an equitable ribbon with R rows and
/// n long rows.
Partition comfortable_content(const Composition& alpha, int a);

struct ComfortableSplit {
    std::int64_t comfortable;
    std::int64_t uncomfortable;
};
ComfortableSplit comfortable_split(const Composition& alpha, int a, const Partition& nu,
                                   int cell_guard = kDefaultLrCellGuard);

}  // namespace equitab
