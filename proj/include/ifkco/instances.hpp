#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ifkco/metric.hpp"

namespace ifkco {

/// SplitMix64 (Steele, Lea, Flood). Increment 0x9E3779B97F4A7C15, output
/// mix constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts
/// 30/27/31. From seed 1234567 the first output is 6457827717110365317.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna); the 256-bit state is filled by four
/// SplitMix64 draws from the seed. From state {1, 2, 3, 4} the first outputs
/// are 11520, 0, 1509978240, 1215971899390074240.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);
  static Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4>& state);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi] (inclusive), by rejection to avoid bias.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

 private:
  Xoshiro256StarStar() = default;
  std::array<std::uint64_t, 4> s_{};
};

enum class Distribution { uniform_square };

struct GenSpec {
  std::size_t n = 200;
  std::size_t k = 20;
  std::size_t q = 50;
  Distribution distribution = Distribution::uniform_square;
  double side = 100.0;
  std::uint64_t seed = 1;
};

/// n i.i.d. points uniform on [0, side]^2 drawn as (x, y) pairs from
/// xoshiro256** seeded with spec.seed. Bit-identical for equal specs.
MetricInstance generate(const GenSpec& spec);

struct PointTable {
  std::vector<Point> points;
  std::vector<std::string> labels;  // empty when the file has no label column
  bool geo = false;                 // columns were lat,lon
};

/// Parses a point CSV: header row, then either coordinate columns
/// (x,y[,z,...]) or lat,lon, plus an optional `label` column. Errors name the
/// offending line.
PointTable read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointTable& table);

/// Reads the CSV at `path` and builds a Euclidean instance. With `geo` the
/// file must carry lat,lon columns, which are projected to meters first.
MetricInstance load_csv(const std::filesystem::path& path, std::size_t k, std::size_t q,
                        bool geo);

}  // namespace ifkco
