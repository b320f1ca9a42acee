#pragma once

#include <cstdint>

#include "equitab/basis_vector.hpp"
#include "equitab/skew_shape.hpp"

namespace equitab {

inline constexpr std::size_t kMaxJacobiTrudiRows = 16;
inline constexpr int kMaxSytCells = 20;

/// r_alpha = (-1)^{l(alpha)} sum over lambda in M(alpha) of (-1)^{l(lambda)} h_lambda.
HVector h_expand_ribbon(const Composition& alpha);

/// Permutation expansion of det(h_{lambda_i - mu_j - i + j}), with h_0 = 1
/// and h_k = 0 for k < 0.
HVector jt_h_expansion(const SkewShape& shape);

/// Rewrites h_lambda in the Schur basis by Pieri steps. Throws Resource when
/// a term has more than cell_guard cells.
SchurVector h_to_s(const HVector& v, int cell_guard = 64);

/// s_mu h_k: sum of s_lambda over horizontal strips lambda/mu of size k.
SchurVector pieri(const Partition& mu, int k);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::int64_t hook_length_count(const Partition& lambda);

/// Standard fillings of the ribbon alpha, as sum_nu c_nu f^nu.
std::int64_t syt_count(const Composition& alpha);
/// The same count by inclusion-exclusion over coarsenings:
/// sum over coarsenings c of (-1)^{l(alpha) - l(c)} N! / prod c_i!.
std::int64_t syt_count_by_coarsenings(const Composition& alpha);

}  // namespace equitab
