#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifkco/json_io.hpp"
#include "ifkco/metric.hpp"
#include "ifkco/radius.hpp"
#include "ifkco/solve.hpp"

namespace ifkco {

/// Inclusive grid start, start + step, ..., up to stop.
struct BetaRange {
  double start = 1.0;
  double stop = 2.0;
  double step = 0.05;

  std::vector<double> values() const;
};

/// Parses "start:stop:step". Throws ParameterError on malformed input,
/// negative start, stop < start or step <= 0.
BetaRange parse_beta_range(std::string_view text);

struct SweepSample {
  double beta = 0.0;
  std::size_t outlier_count = 0;
  /// Only present when outlier_count <= q.
  std::optional<double> alpha;
};

struct SweepCurve {
  std::string instance_id;
  Algorithm algorithm = Algorithm::refined;
  std::vector<SweepSample> samples;  // strictly increasing beta
};

/// One capped NR_q greedy run per beta, spread over a worker pool
/// (0 = hardware concurrency). Samples come back ordered by beta.
SweepCurve run_sweep(const MetricInstance& inst, const RadiusTable& radii,
                     const std::vector<double>& betas, std::string instance_id = {},
                     unsigned threads = 0);

/// CSV with header `beta,outliers,alpha`; alpha is blank for infeasible
/// probes and "inf" for unbounded ratios.
void write_sweep_csv(std::ostream& out, const SweepCurve& curve);

struct CompareOptions {
  std::size_t iterations = 10;
  std::size_t oracle_max_n = 14;
};

/// alpha of every algorithm on one instance and, when n is small enough,
/// the exact optimum together with alpha / OPT per algorithm.
Json compare_algorithms(const MetricInstance& inst, const RadiusTable& radii,
                        const CompareOptions& options);

}  // namespace ifkco
