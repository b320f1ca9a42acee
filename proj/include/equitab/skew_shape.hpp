#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "equitab/composition.hpp"

namespace equitab {

/// Cell coordinates, 1-based, rows counted from the top and columns from
/// the left.
struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    int cell_count() const noexcept { return outer_.size() - inner_.size(); }
    int rows() const noexcept { return static_cast<int>(outer_.length()); }
    /// First and last column of row r (1-based); empty rows have first > last.
    int row_first(int r) const noexcept { return inner_.part(static_cast<std::size_t>(r - 1)) + 1; }
    int row_last(int r) const noexcept { return outer_.part(static_cast<std::size_t>(r - 1)); }
    bool contains(int r, int c) const noexcept { return r >= 1 && r <= rows() && c >= row_first(r) && c <= row_last(r); }

    std::vector<Cell> cells() const;
    std::vector<int> row_lengths() const;
    std::vector<int> column_lengths() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// The ribbon whose row lengths, read top to bottom, are alpha; adjacent rows
/// share exactly one column and the bottom row starts in column 1.
SkewShape ribbon_to_skew(const Composition& alpha);

/// Row lengths of a ribbon shape, or nullopt if the cells do not form a
/// ribbon. Empty rows above or below the cells are ignored.
std::optional<Composition> as_ribbon(const SkewShape& shape);

/// Column lengths of the ribbon alpha, left to right.
std::vector<int> ribbon_column_lengths(const Composition& alpha);

SkewShape transpose(const SkewShape& shape);

/// Pointwise max (union) / min (intersection) of the outer and inner
/// partitions separately. Throws if the result is not a skew shape.
SkewShape skew_union(const SkewShape& s, const SkewShape& t);
SkewShape skew_intersection(const SkewShape& s, const SkewShape& t);

/// Places `lower` strictly below and to the left of `upper` so the two share
/// no row or column. The skew Schur function of the result is the product.
SkewShape disjoint_stack(const SkewShape& upper, const SkewShape& lower);

/// "outer/inner" with comma-separated parts, e.g. "4,4,3,1/3,2".
std::string to_string(const SkewShape& shape);

}  // namespace equitab
