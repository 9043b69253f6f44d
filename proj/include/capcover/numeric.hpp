#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace capcover {

inline constexpr double kFullCircle = 2.0 * std::numbers::pi;

// Relative slack for geometric comparisons. Radius bounds are quotients of
// input values, so instances sitting exactly on a boundary are common.
inline constexpr double kGeomTol = 1e-9;

// Absolute slack on unit capacities (sums of decimal demands rarely hit 1.0
// exactly in binary).
inline constexpr double kCapacityTol = 1e-9;

inline bool leq_rel(double a, double b) {
  if (std::isinf(b)) return b > 0 || a == b;
  return a <= b + kGeomTol * std::max(1.0, std::abs(b));
}

inline bool fits_capacity(double load, double capacity = 1.0) {
  return load <= capacity + kCapacityTol;
}

// Angle reduced to [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kFullCircle);
  if (t < 0) t += kFullCircle;
  if (t >= kFullCircle) t = 0.0;
  return t;
}

// Counter-clockwise distance from `from` to `to`, in [0, 2*pi).
inline double ccw_distance(double from, double to) {
  return wrap_angle(to - from);
}

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the brute-force oracles when an instance exceeds their size limit.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capcover
