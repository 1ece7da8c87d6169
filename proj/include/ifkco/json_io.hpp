#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ifkco/metric.hpp"
#include "ifkco/solve.hpp"

namespace ifkco {

using Json = nlohmann::ordered_json;

/// Instance file:
///   { "n", "k", "q", "dist": [[...]] | null, "points": [[...]] | null,
///     "labels": [...] | null, "projection": "equirectangular" | "none",
///     "metadata": {...} }
/// Exactly one of dist/points is non-null. Point-built instances are written
/// with their coordinates; the matrix is rebuilt on load.
Json instance_to_json(const MetricInstance& inst);
MetricInstance instance_from_json(const Json& j);

void save_instance(const std::filesystem::path& path, const MetricInstance& inst);
MetricInstance load_instance(const std::filesystem::path& path);

/// Solution file:
///   { "algorithm", "centers": [int], "outliers": [int],
///     "assignment": {"<vertex>": int}, "alpha": float | "inf",
///     "beta_trace": [{"t", "beta", "count", "accepted"}] }
/// plus "zero_radius_ratio": true when that convention was used.
Json solution_to_json(const Solution& sol, const SolveReport& report);

/// Reads centers/outliers/assignment back. The assignment is sized to `n`;
/// vertices missing from the object stay kUnassigned.
Solution solution_from_json(const Json& j, std::size_t n);

/// JSON value for a ratio: a number, or the string "inf".
Json ratio_to_json(double value);

Json read_json_file(const std::filesystem::path& path);

}  // namespace ifkco
