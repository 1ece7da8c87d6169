#pragma once

#include <cstddef>
#include <vector>

#include "ifkco/metric.hpp"

namespace ifkco {

/// Per-vertex neighborhood radii.
///
/// nr[i] is the distance from i to its ceil(n/k)-th nearest neighbor and
/// nrq[i] the distance to its ceil((n-q)/k)-th nearest neighbor, where every
/// vertex counts as its own first neighbor.
struct RadiusTable {
  std::vector<double> nr;
  std::vector<double> nrq;
  std::size_t rank_nr = 0;
  std::size_t rank_nrq = 0;
};

enum class RadiusKind { nr, nrq };

inline const std::vector<double>& radii_of(const RadiusTable& table, RadiusKind kind) {
  return kind == RadiusKind::nr ? table.nr : table.nrq;
}

/// ceil(a / b) for b > 0.
constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Value of the rank-th smallest entry (1-based) of each distance row.
/// Rows are processed in parallel; the result is deterministic.
std::vector<double> row_order_statistic(const MetricInstance& inst, std::size_t rank);

RadiusTable compute_radii(const MetricInstance& inst);

}  // namespace ifkco
