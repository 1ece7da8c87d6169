#pragma once

#include <cstddef>
#include <vector>

#include "ifkco/instances.hpp"
#include "ifkco/metric.hpp"

namespace ifkco::testing {

// Vertex order (h, i, j) = (0, 1, 2).
inline constexpr double kExampleM = 10.0;

inline MetricInstance example1() {
  const double m = kExampleM;
  return build_from_matrix({{0, m, m}, {m, 0, 1}, {m, 1, 0}}, 1, 1);
}

inline std::vector<Point> random_points(Xoshiro256StarStar& rng, std::size_t n,
                                        double side = 100.0) {
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {rng.uniform01() * side, rng.uniform01() * side};
  return pts;
}

/// Random planar instance with k in [1, n] and q in [0, n - 1].
inline MetricInstance random_instance(Xoshiro256StarStar& rng, std::size_t n_lo,
                                      std::size_t n_hi) {
  const std::size_t n = rng.uniform_int(n_lo, n_hi);
  const std::size_t k = rng.uniform_int(1, n);
  const std::size_t q = rng.uniform_int(0, n - 1);
  return build_from_points(random_points(rng, n), k, q);
}

}  // namespace ifkco::testing
