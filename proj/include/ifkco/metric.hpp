#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ifkco/error.hpp"

namespace ifkco {

using Point = std::vector<double>;

/// Mean Earth radius used by the planar projection, in meters.
inline constexpr double kEarthRadiusMeters = 6371000.0;

struct GeoPoint {
  double latitude = 0.0;   // degrees, [-90, 90]
  double longitude = 0.0;  // degrees, [-180, 180]
};

/// A finite metric space together with the clustering parameters.
///
/// The distance matrix is stored dense and row-major. Instances are
/// immutable once built; construct them through build_from_points or
/// build_from_matrix, which enforce the metric and parameter invariants.
class MetricInstance {
 public:
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t q() const { return q_; }

  double d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {dist_.data() + i * n_, n_};
  }
  std::span<const double> flat() const { return dist_; }
  double max_distance() const;

  /// Source coordinates when the instance was built from points (possibly
  /// after projection); empty for matrix-built instances.
  const std::vector<Point>& points() const { return points_; }
  bool has_points() const { return !points_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  /// "none" or "equirectangular".
  const std::string& projection() const { return projection_; }
  /// Free-form provenance (generator, distribution, seed, ...).
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Returns a copy with different k and q (validated).
  MetricInstance with_parameters(std::size_t k, std::size_t q) const;

  MetricInstance& set_labels(std::vector<std::string> labels);
  MetricInstance& set_projection(std::string projection);
  MetricInstance& set_metadata(std::string key, std::string value);

 private:
  friend MetricInstance build_from_points(std::vector<Point>, std::size_t, std::size_t);
  friend MetricInstance build_from_matrix(std::span<const double>, std::size_t,
                                          std::size_t, std::size_t);

  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::size_t q_ = 0;
  std::vector<double> dist_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
  std::string projection_ = "none";
  std::map<std::string, std::string> metadata_;
};

/// Throws ParameterError unless n >= 1, 1 <= k <= n and q < n.
void check_parameters(std::size_t n, std::size_t k, std::size_t q);

/// Relative tolerance applied to the largest matrix entry when validating
/// symmetry and the triangle inequality.
inline constexpr double kTriangleRelTol = 1e-9;

/// Euclidean instance over `points`. All points must share one dimension.
MetricInstance build_from_points(std::vector<Point> points, std::size_t k, std::size_t q);

/// Validated instance from a row-major n x n matrix. Entries within the
/// symmetry tolerance are averaged so the stored matrix is exactly symmetric.
MetricInstance build_from_matrix(std::span<const double> dist, std::size_t n,
                                 std::size_t k, std::size_t q);
MetricInstance build_from_matrix(const std::vector<std::vector<double>>& dist,
                                 std::size_t k, std::size_t q);

/// Equirectangular projection to meters, scaled by the cosine of the mean
/// latitude of the input set.
std::vector<Point> project_geo(std::span<const GeoPoint> points);

}  // namespace ifkco
