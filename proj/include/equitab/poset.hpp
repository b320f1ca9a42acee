#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equitab/engine.hpp"
#include "equitab/order.hpp"

namespace equitab {

enum class PosetMode {
    /// Every pair is compared by expansion; filter verdicts are cross-checked.
    Verify,
    /// Pairs that both filters rule out in both directions are declared
    /// incomparable without expansion.
    Fast,
};

/// A pair where a filter ruled out r_alpha >=_s r_beta but the expansion
/// showed it.
struct FilterViolation {
    Composition alpha;
    Composition beta;
    std::string filter;
};

struct PosetGraph {
    int a = 0, n = 0, m = 0;
    /// Canonical representatives in lexicographic order.
    std::vector<Composition> elements;
    /// Other representatives whose expansions equal elements[i].
    std::vector<std::vector<Composition>> aliases;
    /// (i, j) with r_{elements[i]} >_s r_{elements[j]}, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<std::size_t> maximal;
    std::vector<std::size_t> minimal;
    bool is_chain = false;
    std::int64_t expansions_compared = 0;
    std::int64_t pairs_pruned = 0;
    std::vector<FilterViolation> filter_violations;

    bool greater(std::size_t i, std::size_t j) const;
    /// Elements from the top when is_chain, otherwise empty.
    std::vector<Composition> chain() const;
    std::size_t index_of(const Composition& alpha) const;
};

PosetGraph build_poset(Engine& engine, int a, int n, int m, PosetMode mode = PosetMode::Verify);

/// Covers of a strict order given as a relation matrix.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& rel);

/// Irreflexive, antisymmetric and transitive; covers reproduce relations.
bool is_consistent(const PosetGraph& poset);

}  // namespace equitab
