#include "ifkco/radius.hpp"

#include <algorithm>

#include "ifkco/parallel.hpp"

namespace ifkco {

std::vector<double> row_order_statistic(const MetricInstance& inst, std::size_t rank) {
  const std::size_t n = inst.n();
  std::vector<double> out(n, 0.0);
  if (rank == 0 || rank > n) return out;

  parallel_for(n, [&](std::size_t i) {
    auto row = inst.row(i);
    std::vector<double> scratch(row.begin(), row.end());
    auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(scratch.begin(), nth, scratch.end());
    out[i] = *nth;
  }, n < kParallelRowThreshold ? 1u : 0u);
  return out;
}

RadiusTable compute_radii(const MetricInstance& inst) {
  RadiusTable table;
  table.rank_nr = ceil_div(inst.n(), inst.k());
  table.rank_nrq = ceil_div(inst.n() - inst.q(), inst.k());
  table.nr = row_order_statistic(inst, table.rank_nr);
  table.nrq = table.rank_nrq == table.rank_nr ? table.nr
                                              : row_order_statistic(inst, table.rank_nrq);
  return table;
}

}  // namespace ifkco
