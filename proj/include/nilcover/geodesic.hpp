#pragma once

// Unit-speed geodesics from the origin and the inverse problem: the
// minimizing geodesic (and hence the distance) between two points.
//
// The metric is ds² = dx² + dy² + (dz - x dy)², invariant under translate(),
// rotate_z() and line_reflect_y(). A geodesic leaving the origin in direction
// (cos θ cos α, cos θ sin α, sin θ) has horizontal projection turning at rate
// w = sin θ; it minimizes length until w·s reaches 2π.

#include <numbers>
#include <optional>
#include <vector>

#include "nilcover/core.hpp"

namespace nilcover {

/// Geodesic balls exist only up to this radius; distances are certified up to it.
inline constexpr double kMaxRadius = 2.0 * std::numbers::pi;

struct GeodesicParams {
  double alpha = 0.0;  ///< azimuth of the initial direction, in [-π, π)
  double theta = 0.0;  ///< elevation, in [-π/2, π/2]; w = sin θ, c = cos θ
  double s = 0.0;      ///< arc length
};

struct GeodesicSolveResult {
  GeodesicParams params;
  double residual = 0.0;  ///< max-norm mismatch of the end point
  int branch_count = 0;   ///< distinct geodesics of length ≤ 2π found
};

/// End point of the unit-speed geodesic from the origin.
NilPoint geodesic_point(const GeodesicParams& g);

/// Length of the minimizing geodesic from the origin to q, with no upper
/// cap. Exact up to root-finding precision.
double origin_distance(const NilPoint& q);

/// d(p1, p2), or nullopt when it exceeds 2π.
std::optional<double> try_distance(const NilPoint& p1, const NilPoint& p2);

/// d(p1, p2). Throws NoSolution when the distance exceeds 2π.
double distance(const NilPoint& p1, const NilPoint& p2);

/// Minimizing geodesic from p1 to p2, parametrized from the origin after
/// translating p1 there. Uses the rotational symmetry of the problem to
/// reduce it to a single monotone equation. Throws NoSolution beyond 2π.
GeodesicSolveResult geodesic_between(const NilPoint& p1, const NilPoint& p2);

struct ShootingOptions {
  int n_alpha = 16;
  int n_theta = 17;
  int n_s = 8;
  double tolerance = 1e-10;
  int max_iterations = 60;
  double max_length = kMaxRadius;
};

/// All geodesics from the origin to `target` found by damped Newton shooting
/// over (α, θ, s) from a fixed start grid. Sorted by length, then |θ|, then α.
std::vector<GeodesicParams> shoot_geodesics(const NilPoint& target,
                                            const ShootingOptions& options = {});

/// Shooting counterpart of geodesic_between(); branch_count reports how many
/// distinct roots the start grid produced.
GeodesicSolveResult geodesic_between_shooting(const NilPoint& p1, const NilPoint& p2,
                                              const ShootingOptions& options = {});

}  // namespace nilcover
