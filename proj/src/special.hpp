#pragma once

// Cancellation-free helpers shared by the geodesic and sphere formulas.

#include <cmath>

namespace nilcover::detail {

inline constexpr double kSeriesCutoff = 0.1;

/// sin(x)/x
inline double sinc(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
  }
  return std::sin(x) / x;
}

/// (x - sin x) / x^3
inline double sin_defect(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    return 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0 - x2 * x2 * x2 / 362880.0 +
           x2 * x2 * x2 * x2 / 39916800.0;
  }
  return (x - std::sin(x)) / (x * x * x);
}

/// x · d/dx sin_defect(x) = (1 - cos x)/x^2 - 3 (x - sin x)/x^3
inline double sin_defect_log_slope(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    return -x2 / 60.0 + x2 * x2 / 1260.0 - x2 * x2 * x2 / 60480.0 +
           x2 * x2 * x2 * x2 / 4989600.0;
  }
  return (1.0 - std::cos(x)) / (x * x) - 3.0 * sin_defect(x);
}

}  // namespace nilcover::detail
