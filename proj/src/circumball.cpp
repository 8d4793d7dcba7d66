#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Dense>

#include "nilcover/covering.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/geodesic.hpp"

namespace nilcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec4 = Eigen::Vector4d;

// d(C, p_i) - R, or nullopt when some distance exceeds 2π.
std::optional<Vec4> residuals(const std::array<NilPoint, 4>& pts, const Vec4& u) {
  const NilPoint c{u[0], u[1], u[2]};
  Vec4 f;
  for (int i = 0; i < 4; ++i) {
    const auto d = try_distance(c, pts[static_cast<std::size_t>(i)]);
    if (!d) return std::nullopt;
    f[i] = *d - u[3];
  }
  return f;
}

struct Attempt {
  Vec4 u;
  double residual = kInf;
  bool singular = false;
};

Attempt newton(const std::array<NilPoint, 4>& pts, Vec4 u, const CircumballOptions& opt) {
  Attempt out;
  auto f = residuals(pts, u);
  if (!f) return out;
  double norm = f->lpNorm<Eigen::Infinity>();
  bool any_regular = false;
  for (int iter = 0; iter < opt.max_iterations && norm >= opt.tolerance * 1e-3; ++iter) {
    Eigen::Matrix4d J;
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      const double h = 1e-7 * std::max(1.0, std::abs(u[k]));
      Vec4 up = u, um = u;
      up[k] += h;
      um[k] -= h;
      const auto fp = residuals(pts, up);
      const auto fm = residuals(pts, um);
      if (!fp || !fm) ok = false;
      else J.col(k) = (*fp - *fm) / (2.0 * h);
    }
    if (!ok) break;
    const auto qr = J.colPivHouseholderQr();
    if (qr.rank() < 4) {
      out.singular = !any_regular;
      break;
    }
    any_regular = true;
    const Vec4 step = qr.solve(-*f);
    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      const Vec4 trial = u + lambda * step;
      const auto ft = residuals(pts, trial);
      if (ft && ft->lpNorm<Eigen::Infinity>() < norm) {
        u = trial;
        f = ft;
        norm = ft->lpNorm<Eigen::Infinity>();
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
  }
  out.u = u;
  out.residual = norm;
  return out;
}

}  // namespace

CircumballResult circumball(const std::array<NilPoint, 4>& points, const CircumballOptions& options) {
  for (const NilPoint& p : points)
    if (!is_finite(p)) throw DomainError("circumball: non-finite point");

  NilPoint lo = points[0], hi = points[0];
  for (const NilPoint& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  double half_diameter = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (const auto d = try_distance(points[i], points[j])) half_diameter = std::max(half_diameter, 0.5 * *d);

  std::optional<CircumballResult> best;
  int singular = 0;
  int attempts = 0;
  constexpr std::array<double, 3> kSpatial = {0.25, 0.5, 0.75};
  for (double fx : kSpatial)
    for (double fy : kSpatial)
      for (double fz : kSpatial)
        for (int ir = 0; ir < 4; ++ir) {
          Vec4 start;
          start << lo.x + fx * (hi.x - lo.x), lo.y + fy * (hi.y - lo.y), lo.z + fz * (hi.z - lo.z),
              half_diameter + (kMaxRadius - half_diameter) * ir / 3.0;
          ++attempts;
          const Attempt a = newton(points, start, options);
          if (a.singular) ++singular;
          if (!(a.residual < options.tolerance) || !(a.u[3] > 0.0) || a.u[3] > kMaxRadius) continue;
          if (!best || a.u[3] < best->radius - 1e-12) best = CircumballResult{{a.u[0], a.u[1], a.u[2]}, a.u[3], a.residual};
        }
  if (best) return *best;
  if (singular == attempts)
    throw DegenerateConfiguration("circumball: Jacobian singular at every start (coplanar points?)");
  throw NoSolution("circumball: no start converged to a ball of radius <= 2*pi");
}

}  // namespace nilcover
