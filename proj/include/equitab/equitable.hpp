#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "equitab/composition.hpp"

namespace equitab {

/// Short row length a (rows are a or a+1) and short column length b.
struct EquitableParams {
    int a;
    int b;
    friend bool operator==(const EquitableParams&, const EquitableParams&) = default;
};

/// Row lengths take at most two consecutive values and so do column lengths.
/// When all rows (columns) have equal length k, a (b) is reported as k.
std::optional<EquitableParams> is_equitable(const Composition& alpha);

/// True when every part of alpha is a or a+1.
bool has_parts_in(const Composition& alpha, int a);

/// Number of long rows (a+1) and short rows (a). Throws unless has_parts_in.
struct RowCounts {
    int n;
    int m;
    friend bool operator==(const RowCounts&, const RowCounts&) = default;
};
RowCounts row_counts(const Composition& alpha, int a);

/// Number of end rows equal to a; a single row counts once.
int short_ends(const Composition& alpha, int a);

/// Lengths of the runs of short rows around the long rows:
/// alpha = a^{p_1} (a+1) a^{p_2} ... (a+1) a^{p_{n+1}}.
struct Profile {
    std::vector<int> entries;
    friend bool operator==(const Profile&, const Profile&) = default;
};

/// q_j = number of profile entries equal to j; trailing zeros dropped.
struct QuasiProfile {
    std::vector<int> counts;
    int operator[](std::size_t j) const noexcept { return j < counts.size() ? counts[j] : 0; }
    friend bool operator==(const QuasiProfile&, const QuasiProfile&) = default;
};

/// Lexicographic order with the implicit infinite tail of zeros.
std::strong_ordering lex_compare(const QuasiProfile& lhs, const QuasiProfile& rhs);

Profile profile(const Composition& alpha, int a);
QuasiProfile quasi_profile(const Composition& alpha, int a);
QuasiProfile quasi_profile(const Profile& p);

/// The box diagonal ribbon P_{R,S} from the closed-form row/column positions.
Composition box_diagonal(int rows, int cols);

/// P_{R,S} from the cell test against the line y = (R/S) x: a cell belongs
/// when the line meets its interior or passes through its top-left corner.
Composition box_diagonal_geometric(int rows, int cols);

}  // namespace equitab
