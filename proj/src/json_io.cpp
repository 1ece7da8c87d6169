#include "ifkco/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ifkco {

Json ratio_to_json(double value) {
  if (std::isinf(value)) return "inf";
  return value;
}

Json instance_to_json(const MetricInstance& inst) {
  Json j;
  j["n"] = inst.n();
  j["k"] = inst.k();
  j["q"] = inst.q();
  if (inst.has_points()) {
    j["dist"] = nullptr;
    j["points"] = inst.points();
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < inst.n(); ++i) {
      auto row = inst.row(i);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["dist"] = std::move(rows);
    j["points"] = nullptr;
  }
  j["labels"] = inst.labels().empty() ? Json(nullptr) : Json(inst.labels());
  j["projection"] = inst.projection();
  if (!inst.metadata().empty()) j["metadata"] = inst.metadata();
  return j;
}

MetricInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance JSON must be an object");
  auto need_uint = [&](const char* key) -> std::size_t {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
      throw ParseError(std::string("instance JSON: '") + key +
                       "' must be a non-negative integer");
    }
    return j[key].get<std::size_t>();
  };
  const std::size_t n = need_uint("n");
  const std::size_t k = need_uint("k");
  const std::size_t q = need_uint("q");

  const bool has_dist = j.contains("dist") && !j["dist"].is_null();
  const bool has_points = j.contains("points") && !j["points"].is_null();
  if (has_dist == has_points)
    throw ParseError("instance JSON: exactly one of 'dist' and 'points' must be non-null");

  std::string projection = "none";
  if (j.contains("projection") && !j["projection"].is_null()) {
    if (!j["projection"].is_string()) throw ParseError("instance JSON: bad 'projection'");
    projection = j["projection"].get<std::string>();
    if (projection != "none" && projection != "equirectangular")
      throw ParseError("instance JSON: unknown projection '" + projection + "'");
  }

  MetricInstance inst = [&] {
    try {
      if (has_points) {
        auto points = j["points"].get<std::vector<Point>>();
        if (points.size() != n)
          throw ParseError("instance JSON: 'points' has " + std::to_string(points.size()) +
                           " rows but n=" + std::to_string(n));
        return build_from_points(std::move(points), k, q);
      }
      auto dist = j["dist"].get<std::vector<std::vector<double>>>();
      if (dist.size() != n)
        throw ParseError("instance JSON: 'dist' has " + std::to_string(dist.size()) +
                         " rows but n=" + std::to_string(n));
      return build_from_matrix(dist, k, q);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("instance JSON: ") + e.what());
    }
  }();

  if (j.contains("labels") && !j["labels"].is_null()) {
    try {
      inst.set_labels(j["labels"].get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("instance JSON: labels: ") + e.what());
    }
  }
  inst.set_projection(projection);
  if (j.contains("metadata") && j["metadata"].is_object()) {
    for (const auto& [key, value] : j["metadata"].items())
      inst.set_metadata(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  return inst;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_instance(const std::filesystem::path& path, const MetricInstance& inst) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << instance_to_json(inst).dump(1) << '\n';
}

MetricInstance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

Json solution_to_json(const Solution& sol, const SolveReport& report) {
  Json j;
  j["algorithm"] = to_string(report.algorithm);
  j["centers"] = sol.centers;
  j["outliers"] = sol.outliers;
  Json assignment = Json::object();
  for (std::size_t i = 0; i < sol.assignment.size(); ++i)
    if (sol.assignment[i] != kUnassigned) assignment[std::to_string(i)] = sol.assignment[i];
  j["assignment"] = std::move(assignment);
  j["alpha"] = ratio_to_json(report.alpha);
  Json trace = Json::array();
  for (const BetaProbe& p : report.beta_trace)
    trace.push_back({{"t", p.t}, {"beta", p.beta}, {"count", p.count}, {"accepted", p.accepted}});
  j["beta_trace"] = std::move(trace);
  if (report.zero_radius_ratio) j["zero_radius_ratio"] = true;
  return j;
}

Solution solution_from_json(const Json& j, std::size_t n) {
  Solution sol;
  try {
    sol.centers = j.at("centers").get<std::vector<Vertex>>();
    sol.outliers = j.at("outliers").get<std::vector<Vertex>>();
    sol.assignment.assign(n, kUnassigned);
    for (const auto& [key, value] : j.at("assignment").items()) {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(key, &pos);
      if (pos != key.size() || v >= n)
        throw ParseError("solution JSON: bad assignment key '" + key + "'");
      sol.assignment[v] = value.get<Vertex>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
  return sol;
}

}  // namespace ifkco
