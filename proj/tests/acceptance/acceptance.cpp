// Acceptance suite: one line per criterion, non-zero exit if any fails.
//
//   ifkco_acceptance [--out-dir DIR]
//
// Sweep CSVs for the synthetic groups are written under DIR (default
// ./acceptance_out).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ifkco/instances.hpp"
#include "ifkco/oracle.hpp"
#include "ifkco/radius.hpp"
#include "ifkco/solve.hpp"
#include "ifkco/sweep.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using namespace ifkco;
using Clock = std::chrono::steady_clock;

namespace {

// Criterion thresholds.
constexpr double kExampleRuntimeLimitMs = 1.0;
constexpr std::size_t kFeasibilityInstances = 1000;
constexpr std::size_t kFeasibilityMinN = 5;
constexpr std::size_t kFeasibilityMaxN = 200;
constexpr double kFeasibilityRuntimeLimitS = 30.0;
constexpr double kBasicRatioBound = 2.0;
constexpr std::size_t kOracleInstances = 200;
constexpr std::size_t kOracleMaxN = 12;
constexpr double kOptLowerBound = 0.5;
constexpr double kApproxFactor = 4.0;
constexpr double kOracleRuntimeLimitS = 120.0;
constexpr std::size_t kRefinementInstances = 100;
constexpr std::size_t kRefinementIterations = 10;
constexpr std::size_t kGroupSeeds = 5;
constexpr double kOrderingFraction = 0.80;
constexpr double kReferenceMaxAlpha = 1.31;
constexpr double kPipelineRuntimeLimitS = 60.0;
constexpr std::size_t kSelfCertInstances = 50;
constexpr std::size_t kSelfCertMaxN = 7;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

bool all_positive(const std::vector<double>& v) {
  for (double x : v)
    if (!(x > 0.0)) return false;
  return true;
}

// --- 1 -------------------------------------------------------------------
Outcome example1_golden() {
  const auto start = Clock::now();
  const auto inst = testing::example1();
  const auto radii = compute_radii(inst);
  const auto naive = solve_naive(inst, radii);
  const auto basic = solve_basic(inst, radii);
  const auto oracle = brute_force_opt(inst, radii);
  const double ms = seconds_since(start) * 1e3;

  const bool values = naive.report.alpha == testing::kExampleM && oracle.opt_alpha == 1.0 &&
                      basic.report.alpha == 1.0 &&
                      naive.report.alpha / oracle.opt_alpha == testing::kExampleM;
  return {values && ms < kExampleRuntimeLimitMs,
          "naive=" + fmt(naive.report.alpha) + " OPT=" + fmt(oracle.opt_alpha) +
              " basic=" + fmt(basic.report.alpha) + " runtime=" + fmt(ms, 3) + "ms"};
}

// --- 2, 3, 5 -------------------------------------------------------------
struct RandomSuite {
  Outcome feasibility, ratio_bound, observations;
};

bool balls_disjoint(const MetricInstance& inst, const RadiusTable& radii,
                    const std::vector<Vertex>& centers) {
  std::vector<char> taken(inst.n(), 0);
  for (Vertex s : centers) {
    std::size_t size = 0;
    for (Vertex v = 0; v < inst.n(); ++v) {
      if (inst.d(v, s) <= radii.nrq[s]) {
        if (taken[v]) return false;
        taken[v] = 1;
        ++size;
      }
    }
    if (size < radii.rank_nrq) return false;
  }
  return true;
}

RandomSuite random_suite() {
  Xoshiro256StarStar rng(20240601);
  std::size_t infeasible = 0, ratio_violations = 0, ratio_checked = 0, obs_violations = 0;
  double worst_ratio = 0.0;
  const auto start = Clock::now();
  for (std::size_t t = 0; t < kFeasibilityInstances; ++t) {
    const auto inst = testing::random_instance(rng, kFeasibilityMinN, kFeasibilityMaxN);
    const auto radii = compute_radii(inst);
    const auto naive = solve_naive(inst, radii);
    const auto basic = solve_basic(inst, radii);
    const auto refined = solve_refined(inst, radii, kRefinementIterations);
    const auto param = solve_param_naive(inst, radii, kRefinementIterations);
    for (const auto* r : {&naive, &basic, &refined, &param})
      if (!is_feasible(inst, r->solution)) ++infeasible;

    if (all_positive(radii.nrq)) {
      ++ratio_checked;
      for (const auto* r : {&basic, &refined}) {
        worst_ratio = std::max(worst_ratio, r->report.alpha);
        if (!(r->report.alpha <= kBasicRatioBound)) ++ratio_violations;
      }
    }
    if (!balls_disjoint(inst, radii, basic.solution.centers)) ++obs_violations;
  }
  const double secs = seconds_since(start);

  RandomSuite out;
  out.feasibility = {infeasible == 0 && secs < kFeasibilityRuntimeLimitS,
                     std::to_string(kFeasibilityInstances) + " instances x 4 algorithms, " +
                         std::to_string(infeasible) + " violations, runtime=" + fmt(secs, 3) +
                         "s"};
  out.ratio_bound = {ratio_violations == 0 && ratio_checked > 0,
                     std::to_string(ratio_checked) + " instances with NR_q > 0, " +
                         std::to_string(ratio_violations) +
                         " violations, worst alpha=" + fmt(worst_ratio)};
  out.observations = {obs_violations == 0,
                      std::to_string(kFeasibilityInstances) + " basic runs, " +
                          std::to_string(obs_violations) + " violations"};
  return out;
}

// --- 4 -------------------------------------------------------------------
Outcome oracle_suite() {
  Xoshiro256StarStar rng(424242);
  std::size_t done = 0, violations = 0;
  double min_opt = INFINITY, worst_ratio = 0.0;
  const auto start = Clock::now();
  while (done < kOracleInstances) {
    const std::size_t n = rng.uniform_int(3, kOracleMaxN);
    const std::size_t k = rng.uniform_int(1, n);
    const std::size_t q = rng.uniform_int(0, n - 1);
    if (ceil_div(n - q, k) < 2) continue;
    const auto inst = build_from_points(testing::random_points(rng, n), k, q);
    const auto radii = compute_radii(inst);
    const auto opt = brute_force_opt(inst, radii).opt_alpha;
    const auto basic = solve_basic(inst, radii).report.alpha;
    const auto refined = solve_refined(inst, radii, kRefinementIterations).report.alpha;
    min_opt = std::min(min_opt, opt);
    worst_ratio = std::max({worst_ratio, basic / opt, refined / opt});
    if (!(opt >= kOptLowerBound)) ++violations;
    if (!(basic <= kApproxFactor * opt)) ++violations;
    if (!(refined <= kApproxFactor * opt)) ++violations;
    ++done;
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < kOracleRuntimeLimitS,
          std::to_string(done) + " instances, min OPT=" + fmt(min_opt) +
              ", worst alpha/OPT=" + fmt(worst_ratio) + ", " + std::to_string(violations) +
              " violations, runtime=" + fmt(secs, 3) + "s"};
}

// --- 6 -------------------------------------------------------------------
bool bisection_halves(const std::vector<BetaProbe>& trace) {
  double lo = 1.0, hi = 2.0, beta = 1.0, prev = 1.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    if (trace[t].beta != beta || beta < lo || beta > hi) return false;
    (trace[t].accepted ? hi : lo) = beta;
    const double width = hi - lo;
    // The first probe sits on the lower end, so it either keeps [1, 2] or
    // collapses it; from then on every probe is a midpoint.
    if (t == 0 ? !(width == 1.0 || width == 0.0) : width != prev / 2.0) return false;
    prev = width;
    beta = (lo + hi) / 2.0;
  }
  return true;
}

Outcome refinement_suite() {
  Xoshiro256StarStar rng(777);
  std::size_t worse = 0, bad_trace = 0, improved = 0;
  double worst_gap = 0.0;
  for (std::size_t t = 0; t < kRefinementInstances; ++t) {
    const auto inst = testing::random_instance(rng, 20, 400);
    const auto radii = compute_radii(inst);
    const auto basic = solve_basic(inst, radii);
    const auto refined = solve_refined(inst, radii, kRefinementIterations);
    if (refined.report.alpha > basic.report.alpha) {
      ++worse;
      worst_gap = std::max(worst_gap, refined.report.alpha - basic.report.alpha);
    }
    if (refined.report.alpha < basic.report.alpha) ++improved;
    if (refined.report.beta_trace.size() != kRefinementIterations ||
        !bisection_halves(refined.report.beta_trace))
      ++bad_trace;
  }
  return {worse == 0 && bad_trace == 0,
          std::to_string(kRefinementInstances) + " instances: refined worse than basic on " +
              std::to_string(worse) + " (max excess " + fmt(worst_gap) + "), better on " +
              std::to_string(improved) + ", bad traces " + std::to_string(bad_trace)};
}

// --- 7 -------------------------------------------------------------------
struct GroupRun {
  std::vector<std::vector<double>> mean_outliers;  // [setting][beta index]
  double max_alpha = 0.0;
};

Outcome experiment_replication(const fs::path& out_dir) {
  struct Setting {
    const char* group;
    std::size_t n, k, q;
  };
  const std::vector<std::vector<Setting>> groups = {
      {{"group1", 200, 20, 50}, {"group1", 1000, 20, 50}, {"group1", 5000, 20, 50}},
      {{"group2", 1000, 5, 50}, {"group2", 1000, 20, 50}, {"group2", 1000, 100, 50}},
      {{"group3", 1000, 20, 20}, {"group3", 1000, 20, 50}, {"group3", 1000, 20, 100}},
  };
  const auto betas = parse_beta_range("1.0:2.0:0.05").values();
  fs::create_directories(out_dir);

  double max_alpha = 0.0;
  double pipeline_secs = 0.0;
  std::vector<GroupRun> runs(groups.size());
  std::ofstream summary(out_dir / "summary.csv");
  summary << "group,n,k,q,seed,refined_alpha,refined_outliers\n";

  for (std::size_t g = 0; g < groups.size(); ++g) {
    runs[g].mean_outliers.assign(groups[g].size(), std::vector<double>(betas.size(), 0.0));
    for (std::size_t s = 0; s < groups[g].size(); ++s) {
      const Setting& set = groups[g][s];
      for (std::uint64_t seed = 1; seed <= kGroupSeeds; ++seed) {
        const auto start = Clock::now();
        GenSpec spec;
        spec.n = set.n;
        spec.k = set.k;
        spec.q = set.q;
        spec.seed = seed;
        const auto inst = generate(spec);
        const auto radii = compute_radii(inst);
        const auto refined = solve_refined(inst, radii, kRefinementIterations);
        std::ostringstream id;
        id << set.group << "_n" << set.n << "_k" << set.k << "_q" << set.q << "_seed" << seed;
        const auto curve = run_sweep(inst, radii, betas, id.str());
        if (set.n == 5000) pipeline_secs = std::max(pipeline_secs, seconds_since(start));

        std::ofstream csv(out_dir / (id.str() + ".csv"));
        write_sweep_csv(csv, curve);
        summary << set.group << ',' << set.n << ',' << set.k << ',' << set.q << ',' << seed
                << ',' << refined.report.alpha << ',' << refined.solution.outliers.size()
                << '\n';

        max_alpha = std::max(max_alpha, refined.report.alpha);
        for (std::size_t b = 0; b < betas.size(); ++b)
          runs[g].mean_outliers[s][b] +=
              static_cast<double>(curve.samples[b].outlier_count) / kGroupSeeds;
      }
    }
  }

  auto ordered_fraction = [&](const GroupRun& run) {
    std::size_t ok = 0;
    for (std::size_t b = 0; b < betas.size(); ++b) {
      bool sorted = true;
      for (std::size_t s = 1; s < run.mean_outliers.size(); ++s)
        sorted = sorted && run.mean_outliers[s - 1][b] <= run.mean_outliers[s][b];
      ok += sorted;
    }
    return static_cast<double>(ok) / static_cast<double>(betas.size());
  };
  const double by_n = ordered_fraction(runs[0]);
  const double by_q = ordered_fraction(runs[2]);

  const bool pass = by_n >= kOrderingFraction && by_q >= kOrderingFraction &&
                    max_alpha <= kBasicRatioBound && pipeline_secs < kPipelineRuntimeLimitS;
  return {pass, "(a) ordered by n at " + fmt(100 * by_n, 3) + "% of betas, (b) ordered by q at " +
                    fmt(100 * by_q, 3) + "%, (c) max refined alpha=" + fmt(max_alpha) +
                    " (reference value " + fmt(kReferenceMaxAlpha) +
                    "), n=5000 pipeline " + fmt(pipeline_secs, 3) + "s; CSVs in " +
                    out_dir.string()};
}

// --- 8 -------------------------------------------------------------------
Outcome oracle_self_certification() {
  Xoshiro256StarStar rng(8888);
  std::size_t mismatches = 0, total = 0;
  for (std::size_t t = 0; t < kSelfCertInstances; ++t, ++total) {
    const auto inst = testing::random_instance(rng, 1, kSelfCertMaxN);
    const auto radii = compute_radii(inst);
    if (brute_force_opt(inst, radii).opt_alpha != exhaustive_opt(inst, radii).opt_alpha)
      ++mismatches;
  }
  // Integer grids produce coincident points and tied distances.
  for (std::size_t t = 0; t < kSelfCertInstances; ++t, ++total) {
    const std::size_t n = rng.uniform_int(2, kSelfCertMaxN);
    std::vector<Point> pts(n);
    for (auto& p : pts)
      p = {static_cast<double>(rng.uniform_int(0, 3)), static_cast<double>(rng.uniform_int(0, 3))};
    const auto inst =
        build_from_points(std::move(pts), rng.uniform_int(1, n), rng.uniform_int(0, n - 1));
    const auto radii = compute_radii(inst);
    if (brute_force_opt(inst, radii).opt_alpha != exhaustive_opt(inst, radii).opt_alpha)
      ++mismatches;
  }
  return {mismatches == 0, std::to_string(total) + " instances with n <= 7, " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out_dir = "acceptance_out";
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--out-dir" && a + 1 < argc) {
      out_dir = argv[++a];
    } else {
      std::cerr << "usage: " << argv[0] << " [--out-dir DIR]\n";
      return 2;
    }
  }

  int failures = 0;
  auto report = [&](const char* id, const char* name, const Outcome& o) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << o.detail
              << std::endl;
    failures += !o.pass;
  };

  report("AC1", "Example 1 golden", example1_golden());
  const RandomSuite suite = random_suite();
  report("AC2", "feasibility", suite.feasibility);
  report("AC3", "ratio bound <= 2", suite.ratio_bound);
  report("AC4", "OPT >= 1/2 and 4-approximation", oracle_suite());
  report("AC5", "disjoint outlier-related neighborhoods", suite.observations);
  report("AC6", "refinement non-worsening and bisection", refinement_suite());
  report("AC7", "synthetic group replication", experiment_replication(out_dir));
  report("AC8", "oracle self-certification", oracle_self_certification());

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
