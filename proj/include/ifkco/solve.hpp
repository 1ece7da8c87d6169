#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifkco/metric.hpp"
#include "ifkco/radius.hpp"

namespace ifkco {

using Vertex = std::size_t;

/// Marks an outlier in Solution::assignment.
inline constexpr Vertex kUnassigned = std::numeric_limits<Vertex>::max();

/// (S, O, sigma): selected centers in selection order, outliers in ascending
/// order, and for every vertex its assigned center (kUnassigned for outliers).
struct Solution {
  std::vector<Vertex> centers;
  std::vector<Vertex> outliers;
  std::vector<Vertex> assignment;

  bool operator==(const Solution&) const = default;
};

enum class Algorithm { naive, basic, refined, param_naive };

std::string_view to_string(Algorithm algo);
/// Accepts "naive", "basic", "refined", "param_naive" and "param-naive".
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// One probe of the threshold bisection used by the refined and the
/// parameterized naive algorithms. `count` is |O_beta| for the refined
/// algorithm and |S_beta| for the parameterized naive one.
struct BetaProbe {
  std::size_t t = 0;
  double beta = 0.0;
  std::size_t count = 0;
  bool accepted = false;

  bool operator==(const BetaProbe&) const = default;
};

struct SolveReport {
  Algorithm algorithm = Algorithm::basic;
  double alpha = 0.0;
  std::vector<BetaProbe> beta_trace;
  std::chrono::duration<double> elapsed{0.0};
  /// Set when some served vertex has NR_q = 0, i.e. the 0/0 -> 0 or
  /// x/0 -> +inf convention entered alpha.
  bool zero_radius_ratio = false;
};

struct SolveResult {
  Solution solution;
  SolveReport report;
};

/// Nearest-center assignment of every vertex outside `outliers`; ties go to
/// the lowest center index.
std::vector<Vertex> assign_nearest(const MetricInstance& inst, const std::vector<Vertex>& centers,
                                   const std::vector<Vertex>& outliers);

/// Outlier-related fairness ratio d / NR_q with 0/0 := 0 and x/0 := +inf.
double fairness_ratio(double distance, double radius);

struct AlphaEvaluation {
  double alpha = 0.0;
  bool zero_radius_ratio = false;
};

/// Maximum fairness ratio over served vertices. Throws ParameterError when
/// the assignment does not cover exactly V \ O with centers from S.
AlphaEvaluation evaluate_alpha_detailed(const MetricInstance& inst, const RadiusTable& radii,
                                        const Solution& sol);
double evaluate_alpha(const MetricInstance& inst, const RadiusTable& radii, const Solution& sol);

/// True when |S| <= k, |O| <= q, S and O are disjoint and the assignment
/// maps exactly V \ O into S.
bool is_feasible(const MetricInstance& inst, const Solution& sol);

struct GreedyResult {
  std::vector<Vertex> centers;    // selection order
  std::vector<Vertex> remaining;  // ascending
};

/// Threshold greedy shared by all four algorithms: repeatedly pick the
/// remaining vertex of smallest radius (lowest index on ties) and drop every
/// remaining i with d(i, s) <= beta * radius(i). With `cap_centers` the loop
/// also stops once k centers are chosen.
GreedyResult greedy_core(const MetricInstance& inst, const RadiusTable& radii, double beta,
                         RadiusKind kind, bool cap_centers);

/// Outliers := what greedy_core left over (or nothing for the NR variants),
/// nearest-center assignment for the rest.
Solution solution_from_greedy(const MetricInstance& inst, GreedyResult greedy,
                              bool remaining_are_outliers);

SolveResult solve_naive(const MetricInstance& inst, const RadiusTable& radii);
SolveResult solve_basic(const MetricInstance& inst, const RadiusTable& radii);
SolveResult solve_refined(const MetricInstance& inst, const RadiusTable& radii,
                          std::size_t iterations);
SolveResult solve_param_naive(const MetricInstance& inst, const RadiusTable& radii,
                              std::size_t iterations);

SolveResult solve_naive(const MetricInstance& inst);
SolveResult solve_basic(const MetricInstance& inst);
SolveResult solve_refined(const MetricInstance& inst, std::size_t iterations);
SolveResult solve_param_naive(const MetricInstance& inst, std::size_t iterations);

/// Dispatch by algorithm; `iterations` is ignored by naive and basic.
SolveResult solve(Algorithm algo, const MetricInstance& inst, const RadiusTable& radii,
                  std::size_t iterations);

}  // namespace ifkco
