#include "ifkco/sweep.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "ifkco/oracle.hpp"
#include "ifkco/parallel.hpp"

namespace ifkco {

std::vector<double> BetaRange::values() const {
  // Relative slack so "1:2:0.05" includes 2 despite 0.05 not being exact.
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

BetaRange parse_beta_range(std::string_view text) {
  auto fail = [&](const char* why) {
    throw ParameterError("bad beta range '" + std::string(text) + "': " + why +
                         " (expected start:stop:step)");
  };
  double parts[3];
  std::size_t idx = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    const std::string_view field =
        text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos);
    if (idx >= 3) fail("too many fields");
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), parts[idx]);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      fail("non-numeric field");
    if (!std::isfinite(parts[idx])) fail("non-finite value");
    ++idx;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (idx != 3) fail("expected three fields");

  BetaRange range{parts[0], parts[1], parts[2]};
  if (range.start < 0.0) fail("start must be >= 0");
  if (range.stop < range.start) fail("stop must be >= start");
  if (!(range.step > 0.0)) fail("step must be > 0");
  if ((range.stop - range.start) / range.step > 1e7) fail("too many samples");
  return range;
}

SweepCurve run_sweep(const MetricInstance& inst, const RadiusTable& radii,
                     const std::vector<double>& betas, std::string instance_id,
                     unsigned threads) {
  for (std::size_t i = 1; i < betas.size(); ++i)
    if (!(betas[i] > betas[i - 1])) throw ParameterError("sweep betas must be strictly increasing");

  SweepCurve curve;
  curve.instance_id = std::move(instance_id);
  curve.algorithm = Algorithm::refined;
  curve.samples.resize(betas.size());
  parallel_for(betas.size(), [&](std::size_t idx) {
    GreedyResult greedy = greedy_core(inst, radii, betas[idx], RadiusKind::nrq, true);
    SweepSample& sample = curve.samples[idx];
    sample.beta = betas[idx];
    sample.outlier_count = greedy.remaining.size();
    if (sample.outlier_count <= inst.q()) {
      Solution sol = solution_from_greedy(inst, std::move(greedy), true);
      sample.alpha = evaluate_alpha(inst, radii, sol);
    }
  }, threads);
  return curve;
}

void write_sweep_csv(std::ostream& out, const SweepCurve& curve) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "beta,outliers,alpha\n";
  for (const SweepSample& s : curve.samples) {
    out << s.beta << ',' << s.outlier_count << ',';
    if (s.alpha) {
      if (std::isinf(*s.alpha)) out << "inf";
      else out << *s.alpha;
    }
    out << '\n';
  }
  out.precision(old_precision);
}

Json compare_algorithms(const MetricInstance& inst, const RadiusTable& radii,
                        const CompareOptions& options) {
  Json j;
  j["n"] = inst.n();
  j["k"] = inst.k();
  j["q"] = inst.q();
  j["l"] = options.iterations;

  std::optional<OracleResult> oracle;
  if (inst.n() <= options.oracle_max_n) oracle = brute_force_opt(inst, radii, options.oracle_max_n);

  // alpha / OPT with OPT = 0 read as 1 when alpha is also 0, +inf otherwise.
  auto relative = [&](double alpha) {
    return ratio_to_json(oracle->opt_alpha == 0.0 && alpha == 0.0
                             ? 1.0
                             : fairness_ratio(alpha, oracle->opt_alpha));
  };

  Json algorithms = Json::object();
  for (Algorithm algo :
       {Algorithm::naive, Algorithm::basic, Algorithm::refined, Algorithm::param_naive}) {
    const SolveResult r = solve(algo, inst, radii, options.iterations);
    Json entry;
    entry["alpha"] = ratio_to_json(r.report.alpha);
    entry["centers"] = r.solution.centers.size();
    entry["outliers"] = r.solution.outliers.size();
    entry["feasible"] = is_feasible(inst, r.solution);
    if (oracle) entry["alpha_over_opt"] = relative(r.report.alpha);
    algorithms[std::string(to_string(algo))] = std::move(entry);
  }
  j["algorithms"] = std::move(algorithms);

  if (oracle) {
    j["oracle"] = {{"opt_alpha", ratio_to_json(oracle->opt_alpha)},
                   {"centers", oracle->witness.centers},
                   {"outliers", oracle->witness.outliers},
                   {"enumerated", oracle->enumerated}};
  } else {
    j["oracle"] = nullptr;
    j["oracle_skipped"] = "n=" + std::to_string(inst.n()) + " exceeds oracle limit " +
                          std::to_string(options.oracle_max_n);
  }
  return j;
}

}  // namespace ifkco
