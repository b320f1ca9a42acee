#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace equitab {

/// A finite sequence of positive integers. Read as a ribbon, part i is the
/// number of cells in row i counted from the top. The empty composition is a
/// regular value of size 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    /// Number of cells, |alpha|.
    int size() const noexcept;
    /// Number of parts (rows).
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers; trailing zeros are never
/// stored, so the defaulted ordering coincides with zero-padded lexicographic
/// comparison.
class Partition {
public:
    Partition() = default;
    /// Validates monotonicity; strips trailing zeros.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary nonnegative parts into a partition.
    static Partition sorted(std::vector<int> parts);
    static Partition of(const Composition& c) { return sorted(c.vec()); }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int size() const noexcept;
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), zero past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Zero-padded lexicographic comparison of partitions.
std::strong_ordering lex_compare(const Partition& lhs, const Partition& rhs);

Composition reverse(const Composition& alpha);
Composition concat(const Composition& alpha, const Composition& beta);
/// Merges the last part of alpha with the first part of beta; both nonempty.
Composition near_concat(const Composition& alpha, const Composition& beta);
/// beta^{near alpha_1} . beta^{near alpha_2} ... ; both nonempty.
Composition compose(const Composition& alpha, const Composition& beta);

/// Decrement the first part and increment part i (1-based, 2 <= i <= length).
Composition move_cell(const Composition& alpha, std::size_t i);

/// The lexicographically smaller of alpha and its reversal.
Composition canonical(const Composition& alpha);

/// Comma-separated positive decimal integers; the empty string is the empty
/// composition. Throws Error(Parse).
Composition parse_composition(std::string_view text);
std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);

}  // namespace equitab
