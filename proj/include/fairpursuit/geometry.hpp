#pragma once

#include <cmath>

namespace fairpursuit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Reduce an angle into [-pi, pi).
inline double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);  // [-pi, pi]
  return w >= kPi ? w - kTwoPi : w;
}

// Smallest signed difference a - b on the circle, in [-pi, pi).
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace fairpursuit
