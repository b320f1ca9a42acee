#pragma once

#include <cstdint>
#include <map>

#include "equitab/composition.hpp"

namespace equitab {

/// Multiset of sorted coarsenings: partition -> multiplicity.
using CoarseningMultiset = std::map<Partition, std::int64_t>;

/// Longest composition whose coarsenings are enumerated directly.
inline constexpr std::size_t kMaxCoarseningLength = 24;

/// All 2^{l-1} merges of adjacent parts, sorted. The empty composition has
/// the single coarsening {empty}. Throws Resource above kMaxCoarseningLength.
CoarseningMultiset coarsenings(const Composition& alpha);

/// m_alpha(lambda). Uses a pruned merge search for short inputs; longer
/// inputs are only accepted for queries of the form
/// (2a)^k (a+1)^n a^{m-2k}, which are answered by the pair-placement count.
std::int64_t multiplicity(const Composition& alpha, const Partition& lambda);

/// The partition (2a)^k (a+1)^n a^{m-2k}.
Partition lambda_k(int a, int n, int m, int k);

/// Number of ways to merge k disjoint pairs of adjacent short rows of alpha,
/// summed over all ways of distributing the pairs among the runs of the
/// profile. Equals m_alpha(lambda_k).
std::int64_t pair_placement_count(const Composition& alpha, int a, int k);

/// C(x, k) with the convention C(x, k) = 0 for x < 0.
std::int64_t binomial_clamped(std::int64_t x, std::int64_t k);
/// x (x-1) ... (x-k+1) / k! for any integer x.
std::int64_t binomial_generalized(std::int64_t x, std::int64_t k);

/// Ways to choose k disjoint adjacent pairs in a row of x cells.
std::int64_t count_disjoint_pairs(std::int64_t x, std::int64_t k);

/// Both sides of the Jensen convolution identity agree.
bool jensen_check(std::int64_t x, std::int64_t y, std::int64_t v);

}  // namespace equitab
