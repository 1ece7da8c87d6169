#include "ifkco/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ifkco/parallel.hpp"

namespace ifkco {

double MetricInstance::max_distance() const {
  double m = 0.0;
  for (double v : dist_) m = std::max(m, v);
  return m;
}

MetricInstance MetricInstance::with_parameters(std::size_t k, std::size_t q) const {
  check_parameters(n_, k, q);
  MetricInstance copy = *this;
  copy.k_ = k;
  copy.q_ = q;
  return copy;
}

MetricInstance& MetricInstance::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    std::ostringstream msg;
    msg << "expected " << n_ << " labels, got " << labels.size();
    throw ParameterError(msg.str());
  }
  labels_ = std::move(labels);
  return *this;
}

MetricInstance& MetricInstance::set_projection(std::string projection) {
  projection_ = std::move(projection);
  return *this;
}

MetricInstance& MetricInstance::set_metadata(std::string key, std::string value) {
  metadata_[std::move(key)] = std::move(value);
  return *this;
}

void check_parameters(std::size_t n, std::size_t k, std::size_t q) {
  std::ostringstream msg;
  if (n == 0) {
    msg << "instance must contain at least one vertex";
  } else if (k < 1 || k > n) {
    msg << "k must satisfy 1 <= k <= n (k=" << k << ", n=" << n << ")";
  } else if (q >= n) {
    msg << "q must satisfy 0 <= q < n (q=" << q << ", n=" << n << ")";
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

MetricInstance build_from_points(std::vector<Point> points, std::size_t k, std::size_t q) {
  const std::size_t n = points.size();
  check_parameters(n, k, q);
  const std::size_t dim = points.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].size() != dim) {
      std::ostringstream msg;
      msg << "point " << i << " has dimension " << points[i].size() << ", expected " << dim;
      throw MetricError(msg.str());
    }
    for (double c : points[i]) {
      if (!std::isfinite(c)) {
        std::ostringstream msg;
        msg << "point " << i << " has a non-finite coordinate";
        throw MetricError(msg.str());
      }
    }
  }

  MetricInstance inst;
  inst.n_ = n;
  inst.k_ = k;
  inst.q_ = q;
  inst.dist_.assign(n * n, 0.0);
  // Each row i fills the upper triangle j > i; mirrored afterwards so both
  // halves hold the identical double.
  parallel_for(n, [&](std::size_t i) {
    const Point& a = points[i];
    double* row = inst.dist_.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& b = points[j];
      double sum = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = a[c] - b[c];
        sum += diff * diff;
      }
      row[j] = std::sqrt(sum);
    }
  }, n < kParallelRowThreshold ? 1u : 0u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) inst.dist_[i * n + j] = inst.dist_[j * n + i];

  inst.points_ = std::move(points);
  return inst;
}

MetricInstance build_from_matrix(std::span<const double> dist, std::size_t n,
                                 std::size_t k, std::size_t q) {
  if (dist.size() != n * n) {
    std::ostringstream msg;
    msg << "distance matrix has " << dist.size() << " entries, expected " << n << "x" << n;
    throw MetricError(msg.str());
  }
  check_parameters(n, k, q);

  double max_entry = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dist[i * n + j];
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite distance at (" << i << ", " << j << ")";
        throw MetricError(msg.str());
      }
      if (v < 0.0) {
        std::ostringstream msg;
        msg << "negative distance " << v << " at (" << i << ", " << j << ")";
        throw MetricError(msg.str());
      }
      max_entry = std::max(max_entry, v);
    }
    if (dist[i * n + i] != 0.0) {
      std::ostringstream msg;
      msg << "non-zero diagonal entry " << dist[i * n + i] << " at vertex " << i;
      throw MetricError(msg.str());
    }
  }
  const double tol = kTriangleRelTol * max_entry;

  MetricInstance inst;
  inst.n_ = n;
  inst.k_ = k;
  inst.q_ = q;
  inst.dist_.assign(dist.begin(), dist.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = dist[i * n + j];
      const double b = dist[j * n + i];
      if (std::abs(a - b) > tol) {
        std::ostringstream msg;
        msg << "asymmetric distances d(" << i << "," << j << ")=" << a << " vs d(" << j << ","
            << i << ")=" << b;
        throw MetricError(msg.str());
      }
      const double mean = a == b ? a : 0.5 * (a + b);
      inst.dist_[i * n + j] = mean;
      inst.dist_[j * n + i] = mean;
    }
  }

  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dhi = inst.d(h, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (inst.d(h, j) > dhi + inst.d(i, j) + tol) {
          std::ostringstream msg;
          msg << "triangle inequality violated: d(" << h << "," << j << ")=" << inst.d(h, j)
              << " > d(" << h << "," << i << ") + d(" << i << "," << j
              << ")=" << dhi + inst.d(i, j);
          throw MetricError(msg.str());
        }
      }
    }
  }
  return inst;
}

MetricInstance build_from_matrix(const std::vector<std::vector<double>>& dist,
                                 std::size_t k, std::size_t q) {
  const std::size_t n = dist.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      std::ostringstream msg;
      msg << "distance matrix is not square: row " << i << " has " << dist[i].size()
          << " entries, expected " << n;
      throw MetricError(msg.str());
    }
    flat.insert(flat.end(), dist[i].begin(), dist[i].end());
  }
  return build_from_matrix(flat, n, k, q);
}

std::vector<Point> project_geo(std::span<const GeoPoint> points) {
  if (points.empty()) throw MetricError("cannot project an empty point list");
  constexpr double kDegToRad = std::numbers::pi / 180.0;

  double lat_sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const GeoPoint& p = points[i];
    if (!(p.latitude >= -90.0 && p.latitude <= 90.0) ||
        !(p.longitude >= -180.0 && p.longitude <= 180.0)) {
      std::ostringstream msg;
      msg << "geo point " << i << " out of range (lat=" << p.latitude
          << ", lon=" << p.longitude << ")";
      throw MetricError(msg.str());
    }
    lat_sum += p.latitude;
  }
  const double scale = std::cos(lat_sum / static_cast<double>(points.size()) * kDegToRad);

  std::vector<Point> out;
  out.reserve(points.size());
  for (const GeoPoint& p : points) {
    out.push_back({kEarthRadiusMeters * p.longitude * kDegToRad * scale,
                   kEarthRadiusMeters * p.latitude * kDegToRad});
  }
  return out;
}

}  // namespace ifkco
