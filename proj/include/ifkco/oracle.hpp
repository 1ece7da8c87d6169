#pragma once

#include <cstddef>
#include <cstdint>

#include "ifkco/metric.hpp"
#include "ifkco/radius.hpp"
#include "ifkco/solve.hpp"

namespace ifkco {

struct OracleResult {
  double opt_alpha = 0.0;
  Solution witness;
  std::uint64_t enumerated = 0;  // center sets examined
};

inline constexpr std::size_t kOracleDefaultMaxN = 14;
inline constexpr std::size_t kExhaustiveMaxN = 7;

/// Exact optimum by enumerating every center set of size min(k, n).
///
/// Each center set is completed optimally: vertices go to their nearest
/// center and the q non-centers with the largest positive ratios are
/// discarded (ties by lowest index). Among optimal center sets the
/// lexicographically smallest one is returned as witness.
///
/// Throws ParameterError when n exceeds `max_n`.
OracleResult brute_force_opt(const MetricInstance& inst, const RadiusTable& radii,
                             std::size_t max_n = kOracleDefaultMaxN);

/// Reference optimum without the search-space reductions: every center set
/// with 1 <= |S| <= k and every disjoint outlier set with |O| <= q. Only for
/// tiny instances (n <= max_n, default 7).
OracleResult exhaustive_opt(const MetricInstance& inst, const RadiusTable& radii,
                            std::size_t max_n = kExhaustiveMaxN);

}  // namespace ifkco
