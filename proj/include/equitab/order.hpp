#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equitab/basis_vector.hpp"
#include "equitab/engine.hpp"

namespace equitab {

enum class Verdict { Equal, Greater, Less, Incomparable };
std::string to_string(Verdict v);

struct Witness {
    Partition partition;
    std::int64_t coefficient;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of comparing r_alpha with r_beta. The witnesses are the
/// lexicographically largest positive and negative terms of the difference.
struct ComparisonResult {
    Verdict verdict;
    std::optional<Witness> witness_pos;
    std::optional<Witness> witness_neg;
    SchurVector difference;
};

/// Sign pattern of r_alpha - r_beta. Inputs of different sizes or row counts
/// come out Incomparable, with witnesses taken from the difference.
ComparisonResult compare(Engine& engine, const Composition& alpha, const Composition& beta);
ComparisonResult classify(SchurVector difference);

/// Canonical representatives of all arrangements of n parts a+1 and m parts
/// a, up to reversal, in lexicographic order. Throws Resource when the
/// number of arrangements C(n+m, m) exceeds guard.
std::vector<Composition> equitable_elements(int a, int n, int m, std::int64_t guard = 3003);

enum class FilterVerdict { MayCompare, CannotBeGreater };
std::string to_string(FilterVerdict v);

/// SE(alpha) < SE(beta) rules out r_alpha >=_s r_beta.
FilterVerdict filter_short_ends(const Composition& alpha, const Composition& beta, int a);
/// q(alpha) >_lex q(beta) rules out r_alpha >=_s r_beta.
FilterVerdict filter_quasi_profile(const Composition& alpha, const Composition& beta, int a);

/// r_greater >=_s r_lesser, with r_greater - r_lesser given by restricted
/// LR tableaux of shape greater = M_i(lesser).
struct MoveCertificate {
    Composition greater;
    Composition lesser;
    int row;
    SchurVector difference;
};
std::optional<MoveCertificate> certified_move_inequality(const Composition& alpha, int i,
                                                         int cell_guard = 64);

/// r_{delta a a' gamma} >=_s r_{delta a' a gamma} via the product identity and
/// the union/intersection inequality. The shapes lambda/mu (the ribbon
/// a' delta*) and nu/rho (the ribbon a gamma) are recorded together with
/// their union (a' gamma) and intersection (a delta*).
struct ExchangeCertificate {
    Composition greater;
    Composition lesser;
    int case_number;
    SkewShape first;
    SkewShape second;
    SkewShape union_shape;
    SkewShape intersection_shape;
};
std::optional<ExchangeCertificate> certified_exchange_inequality(const Composition& delta, const Composition& gamma,
                                                                 int a, int a_prime);

/// Repeatedly exchanges the leading long row with the short row after it,
/// reversing once the first row is short, until both end rows are short.
struct RaiseResult {
    Composition result;
    /// Every ribbon visited, starting with the input; reversals included.
    std::vector<Composition> path;
    std::vector<ExchangeCertificate> steps;
};
RaiseResult raise_to_short_ends(const Composition& beta, int a);

}  // namespace equitab
