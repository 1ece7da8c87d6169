#include "ifkco/solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ifkco {

namespace {

using Clock = std::chrono::steady_clock;

enum class BisectionTarget {
  outliers,  // refined: accept when |O_beta| <= q
  centers,   // parameterized naive: accept when |S_beta| <= k
};

SolveResult finish(Algorithm algo, const MetricInstance& inst, const RadiusTable& radii,
                   Solution sol, std::vector<BetaProbe> trace, Clock::time_point start) {
  SolveResult result;
  const AlphaEvaluation eval = evaluate_alpha_detailed(inst, radii, sol);
  result.solution = std::move(sol);
  result.report.algorithm = algo;
  result.report.alpha = eval.alpha;
  result.report.zero_radius_ratio = eval.zero_radius_ratio;
  result.report.beta_trace = std::move(trace);
  result.report.elapsed = Clock::now() - start;
  return result;
}

// Bisection of the removal threshold over [1, 2]. The first probe sits on
// the lower end; every later probe is the midpoint of the current interval.
// An accepted probe replaces the incumbent unconditionally.
std::vector<BetaProbe> bisect_beta(const MetricInstance& inst, const RadiusTable& radii,
                                   std::size_t iterations, RadiusKind kind,
                                   BisectionTarget target, Solution& incumbent) {
  std::vector<BetaProbe> trace;
  trace.reserve(iterations);
  double beta_lo = 1.0;
  double beta_hi = 2.0;
  double beta = beta_lo;
  const bool cap = target == BisectionTarget::outliers;
  for (std::size_t t = 0; t < iterations; ++t) {
    GreedyResult greedy = greedy_core(inst, radii, beta, kind, cap);
    const std::size_t count = target == BisectionTarget::outliers ? greedy.remaining.size()
                                                                  : greedy.centers.size();
    const bool accepted =
        target == BisectionTarget::outliers ? count <= inst.q() : count <= inst.k();
    trace.push_back({t, beta, count, accepted});
    if (accepted) {
      incumbent = solution_from_greedy(inst, std::move(greedy), cap);
      beta_hi = beta;
    } else {
      beta_lo = beta;
    }
    beta = (beta_lo + beta_hi) / 2.0;
  }
  return trace;
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::naive: return "naive";
    case Algorithm::basic: return "basic";
    case Algorithm::refined: return "refined";
    case Algorithm::param_naive: return "param_naive";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "basic") return Algorithm::basic;
  if (name == "refined") return Algorithm::refined;
  if (name == "param_naive" || name == "param-naive") return Algorithm::param_naive;
  return std::nullopt;
}

std::vector<Vertex> assign_nearest(const MetricInstance& inst, const std::vector<Vertex>& centers,
                                   const std::vector<Vertex>& outliers) {
  if (centers.empty()) throw ParameterError("cannot assign vertices to an empty center set");
  const std::size_t n = inst.n();
  std::vector<Vertex> sorted_centers = centers;
  std::sort(sorted_centers.begin(), sorted_centers.end());

  std::vector<Vertex> assignment(n, kUnassigned);
  std::vector<char> is_outlier(n, 0);
  for (Vertex o : outliers) is_outlier.at(o) = 1;

  for (Vertex i = 0; i < n; ++i) {
    if (is_outlier[i]) continue;
    auto row = inst.row(i);
    Vertex best = sorted_centers.front();
    double best_d = row[best];
    for (Vertex c : sorted_centers) {
      if (row[c] < best_d) {
        best = c;
        best_d = row[c];
      }
    }
    assignment[i] = best;
  }
  return assignment;
}

double fairness_ratio(double distance, double radius) {
  if (radius == 0.0)
    return distance == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return distance / radius;
}

AlphaEvaluation evaluate_alpha_detailed(const MetricInstance& inst, const RadiusTable& radii,
                                        const Solution& sol) {
  const std::size_t n = inst.n();
  if (sol.assignment.size() != n) {
    std::ostringstream msg;
    msg << "assignment covers " << sol.assignment.size() << " vertices, expected " << n;
    throw ParameterError(msg.str());
  }
  std::vector<char> is_outlier(n, 0), is_center(n, 0);
  for (Vertex o : sol.outliers) {
    if (o >= n) throw ParameterError("outlier index out of range");
    is_outlier[o] = 1;
  }
  for (Vertex c : sol.centers) {
    if (c >= n) throw ParameterError("center index out of range");
    is_center[c] = 1;
  }

  AlphaEvaluation eval;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex c = sol.assignment[i];
    if (is_outlier[i]) {
      if (c != kUnassigned) {
        std::ostringstream msg;
        msg << "outlier " << i << " is assigned to a center";
        throw ParameterError(msg.str());
      }
      continue;
    }
    if (c == kUnassigned || c >= n || !is_center[c]) {
      std::ostringstream msg;
      msg << "served vertex " << i << " is not assigned to a selected center";
      throw ParameterError(msg.str());
    }
    const double r = radii.nrq[i];
    if (r == 0.0) eval.zero_radius_ratio = true;
    eval.alpha = std::max(eval.alpha, fairness_ratio(inst.d(c, i), r));
  }
  return eval;
}

double evaluate_alpha(const MetricInstance& inst, const RadiusTable& radii, const Solution& sol) {
  return evaluate_alpha_detailed(inst, radii, sol).alpha;
}

bool is_feasible(const MetricInstance& inst, const Solution& sol) {
  const std::size_t n = inst.n();
  if (sol.centers.size() > inst.k() || sol.outliers.size() > inst.q()) return false;
  if (sol.assignment.size() != n) return false;
  std::vector<char> is_outlier(n, 0), is_center(n, 0);
  for (Vertex o : sol.outliers) {
    if (o >= n || is_outlier[o]) return false;
    is_outlier[o] = 1;
  }
  for (Vertex c : sol.centers) {
    if (c >= n || is_center[c] || is_outlier[c]) return false;
    is_center[c] = 1;
  }
  for (Vertex i = 0; i < n; ++i) {
    const Vertex c = sol.assignment[i];
    if (is_outlier[i] ? c != kUnassigned : (c >= n || !is_center[c])) return false;
  }
  return true;
}

GreedyResult greedy_core(const MetricInstance& inst, const RadiusTable& radii, double beta,
                         RadiusKind kind, bool cap_centers) {
  const std::vector<double>& radius = radii_of(radii, kind);
  const std::size_t n = inst.n();

  GreedyResult result;
  std::vector<Vertex> pool(n);
  for (Vertex i = 0; i < n; ++i) pool[i] = i;
  std::vector<Vertex> next;
  next.reserve(n);

  while (!pool.empty() && (!cap_centers || result.centers.size() < inst.k())) {
    Vertex s = pool.front();
    for (Vertex i : pool)
      if (radius[i] < radius[s]) s = i;
    result.centers.push_back(s);

    auto row = inst.row(s);
    next.clear();
    for (Vertex i : pool)
      if (i != s && row[i] > beta * radius[i]) next.push_back(i);
    pool.swap(next);
  }
  result.remaining = std::move(pool);
  return result;
}

Solution solution_from_greedy(const MetricInstance& inst, GreedyResult greedy,
                              bool remaining_are_outliers) {
  Solution sol;
  sol.centers = std::move(greedy.centers);
  if (remaining_are_outliers) sol.outliers = std::move(greedy.remaining);
  sol.assignment = assign_nearest(inst, sol.centers, sol.outliers);
  return sol;
}

SolveResult solve_naive(const MetricInstance& inst, const RadiusTable& radii) {
  const auto start = Clock::now();
  Solution sol = solution_from_greedy(
      inst, greedy_core(inst, radii, 2.0, RadiusKind::nr, /*cap_centers=*/false), false);
  return finish(Algorithm::naive, inst, radii, std::move(sol), {}, start);
}

SolveResult solve_basic(const MetricInstance& inst, const RadiusTable& radii) {
  const auto start = Clock::now();
  Solution sol = solution_from_greedy(
      inst, greedy_core(inst, radii, 2.0, RadiusKind::nrq, /*cap_centers=*/true), true);
  return finish(Algorithm::basic, inst, radii, std::move(sol), {}, start);
}

SolveResult solve_refined(const MetricInstance& inst, const RadiusTable& radii,
                          std::size_t iterations) {
  const auto start = Clock::now();
  Solution sol = solve_basic(inst, radii).solution;
  auto trace = bisect_beta(inst, radii, iterations, RadiusKind::nrq,
                           BisectionTarget::outliers, sol);
  return finish(Algorithm::refined, inst, radii, std::move(sol), std::move(trace), start);
}

SolveResult solve_param_naive(const MetricInstance& inst, const RadiusTable& radii,
                              std::size_t iterations) {
  const auto start = Clock::now();
  Solution sol = solve_naive(inst, radii).solution;
  auto trace = bisect_beta(inst, radii, iterations, RadiusKind::nr,
                           BisectionTarget::centers, sol);
  return finish(Algorithm::param_naive, inst, radii, std::move(sol), std::move(trace), start);
}

SolveResult solve_naive(const MetricInstance& inst) { return solve_naive(inst, compute_radii(inst)); }
SolveResult solve_basic(const MetricInstance& inst) { return solve_basic(inst, compute_radii(inst)); }
SolveResult solve_refined(const MetricInstance& inst, std::size_t iterations) {
  return solve_refined(inst, compute_radii(inst), iterations);
}
SolveResult solve_param_naive(const MetricInstance& inst, std::size_t iterations) {
  return solve_param_naive(inst, compute_radii(inst), iterations);
}

SolveResult solve(Algorithm algo, const MetricInstance& inst, const RadiusTable& radii,
                  std::size_t iterations) {
  switch (algo) {
    case Algorithm::naive: return solve_naive(inst, radii);
    case Algorithm::basic: return solve_basic(inst, radii);
    case Algorithm::refined: return solve_refined(inst, radii, iterations);
    case Algorithm::param_naive: return solve_param_naive(inst, radii, iterations);
  }
  throw ParameterError("unknown algorithm");
}

}  // namespace ifkco
