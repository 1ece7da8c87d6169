#pragma once

#include <stdexcept>
#include <string>

namespace ifkco {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k, q or n outside the admissible range (1 <= k <= n, 0 <= q < n).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Distance data that is not a metric (negative, asymmetric, non-zero
/// diagonal, triangle violation) or malformed coordinates.
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed input files (CSV, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifkco
