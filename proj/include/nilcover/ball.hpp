#pragma once

// Geodesic spheres and balls centred at the origin.
//
// The M-image of the sphere of radius R is the surface of revolution of the
// profile (X(R, θ), Z(R, θ)); the sphere itself adds the shear xy/2 back.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nilcover/core.hpp"

namespace nilcover {

struct ProfilePoint {
  double X = 0.0;  ///< distance from the z axis
  double Z = 0.0;  ///< M-image height
};

/// Throws DomainError unless 0 < R ≤ 2π.
void require_radius(double R);

ProfilePoint sphere_profile(double R, double theta);

/// dZ/dθ of the profile, in closed form.
double profile_dz_dtheta(double R, double theta);

NilPoint sphere_point(double R, double theta, double phi);

/// Volume of the ball of radius R (0 ≤ R ≤ 2π), by adaptive Gauss–Kronrod
/// quadrature of 2π ∫ X² dZ over θ ∈ [0, π/2].
double ball_volume(double R);

/// Convex in the affine-Euclidean sense of the model: R ≤ π/2.
bool is_ball_convex(double R);

/// The M-image of the ball is Euclidean convex: R ≤ π.
bool is_m_image_convex(double R);

/// First θ in (0, π/2) where dZ/dθ changes sign, located by a sign scan over
/// `samples` intervals and bisection. nullopt when the profile is monotone.
std::optional<double> profile_critical_angle(double R, int samples = 4000);

/// Longest z-parallel chord of the ball, 2 max_θ Z(R, θ).
double max_vertical_chord(double R);

struct SphereMesh {
  std::vector<NilPoint> vertices;
  std::vector<NilPoint> normals;  ///< unit outward normals, from the parametrization
  std::vector<std::array<std::size_t, 3>> faces;
  int n_theta = 0;  ///< latitude rings, poles excluded
  int n_phi = 0;    ///< vertices per ring
};

/// Latitude–longitude triangulation of the sphere of radius R with pole fans;
/// 2·n_theta·n_phi outward-oriented triangles. With `m_image` the vertices
/// (and normals) are mapped through M.
SphereMesh sphere_mesh(double R, int n_theta, int n_phi, bool m_image = false);

/// Largest height of any vertex above the tangent plane of another vertex.
/// Zero (up to rounding) iff every vertex is an extreme point of the convex
/// hull of the vertex set.
double support_violation(const SphereMesh& mesh);

/// Euclidean convexity diagnostic for the ball: support_violation of a
/// sampled sphere, compared against a relative tolerance.
struct ConvexityScan {
  double max_violation = 0.0;
  bool convex = false;
};
ConvexityScan scan_ball_convexity(double R, int n_theta = 24, int n_phi = 48,
                                  bool m_image = false);

/// ASCII Wavefront OBJ: `v x y z` lines at 17 significant digits, then
/// 1-indexed `f i j k` lines.
void write_obj(std::ostream& out, const SphereMesh& mesh);

}  // namespace nilcover
