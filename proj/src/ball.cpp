#include "nilcover/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "nilcover/errors.hpp"
#include "nilcover/geodesic.hpp"
#include "special.hpp"

namespace nilcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kEdgeSlack = 1e-12;

void require_theta(double theta) {
  if (!(std::abs(theta) <= kHalfPi + kEdgeSlack))
    throw DomainError("theta must lie in [-pi/2, pi/2], got " + std::to_string(theta));
}

// Bracket of dZ/dθ after removing the factor cos θ; equals sin R at θ = π/2.
double profile_slope_factor(double R, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double x = R * s;
  return R + 0.5 * R * R * R *
                 ((c * c - 2.0 * s * s) * detail::sin_defect(x) +
                  c * c * detail::sin_defect_log_slope(x));
}

ProfilePoint profile_unchecked(double R, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {c * R * detail::sinc(0.5 * R * s),
          R * s + 0.5 * c * c * R * R * R * s * detail::sin_defect(R * s)};
}

NilPoint sphere_point_unchecked(double R, double theta, double phi) {
  const ProfilePoint pp = profile_unchecked(R, theta);
  return {pp.X * std::cos(phi), pp.X * std::sin(phi),
          pp.Z + 0.25 * pp.X * pp.X * std::sin(2.0 * phi)};
}

NilPoint cross(const NilPoint& a, const NilPoint& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot(const NilPoint& a, const NilPoint& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

NilPoint sub(const NilPoint& a, const NilPoint& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

NilPoint unit(const NilPoint& a) {
  const double n = std::sqrt(dot(a, a));
  return {a.x / n, a.y / n, a.z / n};
}

NilPoint sphere_normal(double R, double theta, double phi) {
  constexpr double h = 1e-6;
  const NilPoint dt = sub(sphere_point_unchecked(R, theta + h, phi),
                          sphere_point_unchecked(R, theta - h, phi));
  const NilPoint dp = sub(sphere_point_unchecked(R, theta, phi + h),
                          sphere_point_unchecked(R, theta, phi - h));
  NilPoint n = unit(cross(dp, dt));
  // The ball is star-shaped about its centre.
  if (dot(n, sphere_point_unchecked(R, theta, phi)) < 0.0) n = {-n.x, -n.y, -n.z};
  return n;
}

}  // namespace

void require_radius(double R) {
  if (!(R > 0.0 && R <= kMaxRadius + kEdgeSlack))
    throw DomainError("radius must lie in (0, 2*pi], got " + std::to_string(R));
}

ProfilePoint sphere_profile(double R, double theta) {
  require_radius(R);
  require_theta(theta);
  if (theta == 0.0) return {R, 0.0};
  return profile_unchecked(R, theta);
}

double profile_dz_dtheta(double R, double theta) {
  require_radius(R);
  require_theta(theta);
  return std::cos(theta) * profile_slope_factor(R, theta);
}

NilPoint sphere_point(double R, double theta, double phi) {
  require_radius(R);
  require_theta(theta);
  if (theta == 0.0)
    return {R * std::cos(phi), R * std::sin(phi), 0.5 * R * R * std::cos(phi) * std::sin(phi)};
  return sphere_point_unchecked(R, theta, phi);
}

double ball_volume(double R) {
  if (R == 0.0) return 0.0;
  require_radius(R);
  auto integrand = [R](double theta) {
    const ProfilePoint pp = profile_unchecked(R, theta);
    return pp.X * pp.X * std::cos(theta) * profile_slope_factor(R, theta);
  };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, kHalfPi, 15, 1e-14, &error);
  return 2.0 * kPi * integral;
}

bool is_ball_convex(double R) {
  require_radius(R);
  return R <= kHalfPi;
}

bool is_m_image_convex(double R) {
  require_radius(R);
  return R <= kPi;
}

std::optional<double> profile_critical_angle(double R, int samples) {
  require_radius(R);
  samples = std::max(samples, 2);
  auto g = [R](double theta) { return profile_slope_factor(R, theta); };
  double prev_theta = 0.0;
  double prev = g(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double theta = kHalfPi * i / samples;
    const double cur = g(theta);
    if (prev > 0.0 && cur < 0.0) {
      double lo = prev_theta;
      double hi = theta;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_theta = theta;
    prev = cur;
  }
  return std::nullopt;
}

double max_vertical_chord(double R) {
  require_radius(R);
  constexpr int kScan = 400;
  int best = kScan;
  double best_z = profile_unchecked(R, kHalfPi).Z;
  for (int i = 1; i < kScan; ++i) {
    const double z = profile_unchecked(R, kHalfPi * i / kScan).Z;
    if (z > best_z) {
      best_z = z;
      best = i;
    }
  }
  if (best == kScan) return 2.0 * best_z;
  const double lo = kHalfPi * (best - 1) / kScan;
  const double hi = kHalfPi * (best + 1) / kScan;
  const auto [theta, neg_z] = boost::math::tools::brent_find_minima(
      [R](double t) { return -profile_unchecked(R, t).Z; }, lo, hi, 40);
  (void)theta;
  return 2.0 * std::max(best_z, -neg_z);
}

SphereMesh sphere_mesh(double R, int n_theta, int n_phi, bool m_image) {
  require_radius(R);
  if (n_theta < 4 || n_phi < 4)
    throw DomainError("sphere_mesh needs n_theta >= 4 and n_phi >= 4");

  SphereMesh mesh;
  mesh.n_theta = n_theta;
  mesh.n_phi = n_phi;
  const auto ring_size = static_cast<std::size_t>(n_phi);
  mesh.vertices.reserve(static_cast<std::size_t>(n_theta) * ring_size + 2);

  mesh.vertices.push_back({0.0, 0.0, -R});
  mesh.normals.push_back({0.0, 0.0, -1.0});
  for (int i = 1; i <= n_theta; ++i) {
    const double theta = -kHalfPi + kPi * i / (n_theta + 1);
    for (int j = 1; j <= n_phi; ++j) {
      const double phi = -kPi + 2.0 * kPi * j / n_phi;
      mesh.vertices.push_back(sphere_point(R, theta, phi));
      mesh.normals.push_back(sphere_normal(R, theta, phi));
    }
  }
  mesh.vertices.push_back({0.0, 0.0, R});
  mesh.normals.push_back({0.0, 0.0, 1.0});

  const std::size_t north = mesh.vertices.size() - 1;
  auto idx = [&](std::size_t ring, std::size_t j) { return 1 + ring * ring_size + j % ring_size; };
  for (std::size_t j = 0; j < ring_size; ++j) mesh.faces.push_back({0, idx(0, j + 1), idx(0, j)});
  for (std::size_t ring = 0; ring + 1 < static_cast<std::size_t>(n_theta); ++ring) {
    for (std::size_t j = 0; j < ring_size; ++j) {
      const std::size_t a = idx(ring, j), b = idx(ring, j + 1);
      const std::size_t c = idx(ring + 1, j + 1), d = idx(ring + 1, j);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  const std::size_t top = static_cast<std::size_t>(n_theta) - 1;
  for (std::size_t j = 0; j < ring_size; ++j)
    mesh.faces.push_back({idx(top, j), idx(top, j + 1), north});

  if (m_image) {
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
      const NilPoint v = mesh.vertices[k];
      const NilPoint n = mesh.normals[k];
      // Normals transform with the inverse transpose of dM.
      mesh.normals[k] = unit({n.x + 0.5 * v.y * n.z, n.y + 0.5 * v.x * n.z, n.z});
      mesh.vertices[k] = m_map(v);
    }
  }
  return mesh;
}

double support_violation(const SphereMesh& mesh) {
  double worst = 0.0;
  for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
    const NilPoint& v = mesh.vertices[k];
    const NilPoint& n = mesh.normals[k];
    for (const NilPoint& p : mesh.vertices) worst = std::max(worst, dot(sub(p, v), n));
  }
  return worst;
}

ConvexityScan scan_ball_convexity(double R, int n_theta, int n_phi, bool m_image) {
  const SphereMesh mesh = sphere_mesh(R, n_theta, n_phi, m_image);
  ConvexityScan scan;
  scan.max_violation = support_violation(mesh);
  scan.convex = scan.max_violation <= 1e-9 * R;
  return scan;
}

void write_obj(std::ostream& out, const SphereMesh& mesh) {
  char line[128];
  for (const NilPoint& v : mesh.vertices) {
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << line;
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace nilcover
