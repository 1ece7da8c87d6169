#include "ifkco/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace ifkco {

namespace {

void check_size(const MetricInstance& inst, std::size_t max_n, const char* what) {
  if (inst.n() > max_n) {
    std::ostringstream msg;
    msg << what << " supports at most " << max_n << " vertices (n=" << inst.n() << ")";
    throw ParameterError(msg.str());
  }
}

// Advances `combo` (strictly increasing indices in [0, n)) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& combo, std::size_t n) {
  const std::size_t r = combo.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (combo[i] < n - r + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double nearest_distance(const MetricInstance& inst, const std::vector<Vertex>& centers,
                        Vertex i) {
  double best = std::numeric_limits<double>::infinity();
  for (Vertex c : centers) best = std::min(best, inst.d(c, i));
  return best;
}

}  // namespace

OracleResult brute_force_opt(const MetricInstance& inst, const RadiusTable& radii,
                             std::size_t max_n) {
  check_size(inst, max_n, "brute_force_opt");
  const std::size_t n = inst.n();
  const std::size_t size = std::min(inst.k(), n);

  OracleResult result;
  result.opt_alpha = std::numeric_limits<double>::infinity();
  std::vector<Vertex> best_centers, best_outliers;

  std::vector<Vertex> combo(size);
  std::iota(combo.begin(), combo.end(), Vertex{0});
  std::vector<double> ratio(n);
  std::vector<char> is_center(n);
  std::vector<Vertex> candidates;
  candidates.reserve(n);
  do {
    ++result.enumerated;
    std::fill(is_center.begin(), is_center.end(), 0);
    for (Vertex c : combo) is_center[c] = 1;

    candidates.clear();
    for (Vertex i = 0; i < n; ++i) {
      ratio[i] = fairness_ratio(nearest_distance(inst, combo, i), radii.nrq[i]);
      if (!is_center[i] && ratio[i] > 0.0) candidates.push_back(i);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return ratio[a] > ratio[b]; });
    const std::size_t dropped = std::min(inst.q(), candidates.size());

    double alpha = 0.0;
    for (std::size_t idx = dropped; idx < candidates.size(); ++idx)
      alpha = std::max(alpha, ratio[candidates[idx]]);

    if (alpha < result.opt_alpha) {
      result.opt_alpha = alpha;
      best_centers = combo;
      best_outliers.assign(candidates.begin(),
                           candidates.begin() + static_cast<std::ptrdiff_t>(dropped));
      std::sort(best_outliers.begin(), best_outliers.end());
    }
  } while (next_combination(combo, n));

  result.witness.centers = std::move(best_centers);
  result.witness.outliers = std::move(best_outliers);
  result.witness.assignment =
      assign_nearest(inst, result.witness.centers, result.witness.outliers);
  return result;
}

OracleResult exhaustive_opt(const MetricInstance& inst, const RadiusTable& radii,
                            std::size_t max_n) {
  check_size(inst, max_n, "exhaustive_opt");
  const std::size_t n = inst.n();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  OracleResult result;
  result.opt_alpha = std::numeric_limits<double>::infinity();
  std::uint32_t best_s = 0, best_o = 0;

  std::vector<Vertex> centers;
  std::vector<double> ratio(n);
  for (std::uint32_t s_mask = 1; s_mask <= full; ++s_mask) {
    if (static_cast<std::size_t>(std::popcount(s_mask)) > inst.k()) continue;
    ++result.enumerated;
    centers.clear();
    for (Vertex i = 0; i < n; ++i)
      if (s_mask >> i & 1u) centers.push_back(i);
    for (Vertex i = 0; i < n; ++i)
      ratio[i] = fairness_ratio(nearest_distance(inst, centers, i), radii.nrq[i]);

    const std::uint32_t free_mask = full & ~s_mask;
    // Walk every subset of the non-centers, including the empty one.
    for (std::uint32_t o_mask = free_mask;; o_mask = (o_mask - 1) & free_mask) {
      if (static_cast<std::size_t>(std::popcount(o_mask)) <= inst.q()) {
        double alpha = 0.0;
        for (Vertex i = 0; i < n; ++i)
          if (!(o_mask >> i & 1u)) alpha = std::max(alpha, ratio[i]);
        if (alpha < result.opt_alpha) {
          result.opt_alpha = alpha;
          best_s = s_mask;
          best_o = o_mask;
        }
      }
      if (o_mask == 0) break;
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    if (best_s >> i & 1u) result.witness.centers.push_back(i);
    if (best_o >> i & 1u) result.witness.outliers.push_back(i);
  }
  result.witness.assignment =
      assign_nearest(inst, result.witness.centers, result.witness.outliers);
  return result;
}

}  // namespace ifkco
