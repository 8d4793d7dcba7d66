#include "nilcover/geodesic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include "nilcover/errors.hpp"
#include "special.hpp"

namespace nilcover {

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerance on the 2π cap, so that points produced at radius exactly 2π
// are still reachable after rounding.
constexpr double kCapSlack = 1e-12;

double wrap_alpha(double a) {
  // [-π, π)
  double r = normalize_angle(a);
  if (r >= kPi) r -= 2.0 * kPi;
  return r;
}

// Reduced form of a target seen from the origin: radius of the horizontal
// projection, M-image height, and the polar angle of the projection.
struct Reduced {
  double r = 0.0;
  double height = 0.0;  // z - xy/2, signed
  double bearing = 0.0;
};

Reduced reduce(const NilPoint& q) {
  return {std::hypot(q.x, q.y), q.z - 0.5 * q.x * q.y, std::atan2(q.y, q.x)};
}

// Helix geodesics with half-turn u = w·s/2 reaching horizontal radius r climb
// to M-height 2u + r² g(u)/4, g(u) = (u - sin u cos u)/sin² u. On (0, π)
// this is strictly increasing from 0 to ∞.
double helix_height(double u, double r) {
  if (u == 0.0) return 0.0;
  const double su = std::sin(u);
  const double quarter_g = u * u * u * detail::sin_defect(2.0 * u) / (su * su);
  return 2.0 * u + r * r * quarter_g;
}

double helix_length(double u, double r) {
  const double k = 1.0 / detail::sinc(u);
  return std::sqrt(r * r * k * k + 4.0 * u * u);
}

// Distance along the z axis: the fibre segment up to 2π, beyond that the
// family of helices closing after one full turn is shorter.
double axis_length(double h) {
  return h <= kMaxRadius ? h : kMaxRadius * std::sqrt(h / kPi - 1.0);
}

struct HalfTurn {
  double u = 0.0;
  double s = 0.0;
  bool on_axis = false;
};

HalfTurn solve_half_turn(double r, double h) {
  if (r == 0.0) return {kPi, axis_length(h), true};
  if (h == 0.0) return {0.0, r, false};

  auto f = [&](double u) { return helix_height(u, r) - h; };
  double hi = 0.5 * h;
  if (hi >= kPi) {
    // f blows up at π; step towards it until the sign flips.
    double gap = 0.5;
    hi = kPi - gap;
    while (f(hi) <= 0.0) {
      gap *= 0.5;
      if (gap < 1e-15) return {kPi, axis_length(h), true};
      hi = kPi - gap;
    }
  }
  if (f(hi) == 0.0) return {hi, helix_length(hi, r), false};

  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, 0.0, hi, -h, f(hi), boost::math::tools::eps_tolerance<double>(52), max_iter);
  const double u = 0.5 * (a + b);
  return {u, helix_length(u, r), false};
}

}  // namespace

NilPoint geodesic_point(const GeodesicParams& g) {
  const double w = std::sin(g.theta);
  const double c = std::cos(g.theta);
  const double s = g.s;
  const double half_turn = 0.5 * w * s;
  const double radial = c * s * detail::sinc(half_turn);
  const double bearing = half_turn + g.alpha;
  const double x = radial * std::cos(bearing);
  const double y = radial * std::sin(bearing);
  const double m_height = w * s + 0.5 * c * c * w * s * s * s * detail::sin_defect(w * s);
  return {x, y, m_height + 0.5 * x * y};
}

double origin_distance(const NilPoint& q) {
  const Reduced red = reduce(q);
  return solve_half_turn(red.r, std::abs(red.height)).s;
}

std::optional<double> try_distance(const NilPoint& p1, const NilPoint& p2) {
  const NilPoint q = translate(p2, inverse(translation_to(p1)));
  const double d = origin_distance(q);
  if (!(d <= kMaxRadius + kCapSlack)) return std::nullopt;
  return d;
}

double distance(const NilPoint& p1, const NilPoint& p2) {
  if (!is_finite(p1) || !is_finite(p2)) throw DomainError("distance: non-finite point");
  auto d = try_distance(p1, p2);
  if (!d) throw NoSolution("distance: no geodesic of length <= 2*pi joins the points");
  return *d;
}

GeodesicSolveResult geodesic_between(const NilPoint& p1, const NilPoint& p2) {
  if (!is_finite(p1) || !is_finite(p2)) throw DomainError("geodesic_between: non-finite point");
  const NilPoint q = translate(p2, inverse(translation_to(p1)));
  const Reduced red = reduce(q);
  const double sign = red.height < 0.0 ? -1.0 : 1.0;
  const HalfTurn ht = solve_half_turn(red.r, std::abs(red.height));
  if (!(ht.s <= kMaxRadius + kCapSlack))
    throw NoSolution("geodesic_between: no geodesic of length <= 2*pi joins the points");

  GeodesicParams g;
  g.s = ht.s;
  if (ht.s == 0.0) {
    g = {};
  } else if (ht.on_axis) {
    g.theta = sign * 0.5 * kPi;
    g.alpha = 0.0;
  } else {
    g.theta = sign * std::atan2(2.0 * std::sin(ht.u), red.r);
    g.alpha = wrap_alpha(red.bearing - sign * ht.u);
  }
  GeodesicSolveResult out;
  out.params = g;
  out.residual = max_abs_diff(geodesic_point(g), q);
  out.branch_count = 1;
  return out;
}

namespace {

// (α, θ, s) with θ folded into [-π/2, π/2] and s ≥ 0.
GeodesicParams canonical(GeodesicParams g) {
  if (g.s < 0.0) {
    g.s = -g.s;
    g.theta = -g.theta;
    g.alpha += kPi;
  }
  g.theta = normalize_angle(g.theta);
  if (g.theta > 0.5 * kPi) {
    g.theta = kPi - g.theta;
    g.alpha += kPi;
  } else if (g.theta < -0.5 * kPi) {
    g.theta = -kPi - g.theta;
    g.alpha += kPi;
  }
  g.alpha = wrap_alpha(g.alpha);
  return g;
}

Eigen::Vector3d residual_vec(const GeodesicParams& g, const NilPoint& target) {
  const NilPoint p = geodesic_point(g);
  return {p.x - target.x, p.y - target.y, p.z - target.z};
}

bool same_geodesic(const GeodesicParams& a, const GeodesicParams& b) {
  if (std::abs(a.s - b.s) > 1e-7 || std::abs(a.theta - b.theta) > 1e-6) return false;
  // Azimuth is irrelevant along the fibre.
  if (0.5 * kPi - std::abs(a.theta) < 1e-6) return true;
  return std::abs(normalize_angle(a.alpha - b.alpha)) < 1e-6;
}

}  // namespace

std::vector<GeodesicParams> shoot_geodesics(const NilPoint& target, const ShootingOptions& opt) {
  if (!is_finite(target)) throw DomainError("shoot_geodesics: non-finite target");
  std::vector<GeodesicParams> roots;
  if (target == kOrigin) {
    roots.push_back({});
    return roots;
  }

  for (int ia = 0; ia < opt.n_alpha; ++ia) {
    for (int it = 0; it < opt.n_theta; ++it) {
      for (int is = 0; is < opt.n_s; ++is) {
        GeodesicParams g;
        g.alpha = -kPi + 2.0 * kPi * ia / opt.n_alpha;
        g.theta = -0.5 * kPi + kPi * it / (opt.n_theta - 1);
        g.s = opt.max_length * (is + 1) / opt.n_s;

        Eigen::Vector3d F = residual_vec(g, target);
        double norm = F.lpNorm<Eigen::Infinity>();
        for (int iter = 0; iter < opt.max_iterations && norm >= opt.tolerance; ++iter) {
          Eigen::Matrix3d J;
          constexpr double h = 1e-7;
          for (int k = 0; k < 3; ++k) {
            GeodesicParams gp = g, gm = g;
            double* cp = k == 0 ? &gp.alpha : k == 1 ? &gp.theta : &gp.s;
            double* cm = k == 0 ? &gm.alpha : k == 1 ? &gm.theta : &gm.s;
            *cp += h;
            *cm -= h;
            J.col(k) = (residual_vec(gp, target) - residual_vec(gm, target)) / (2.0 * h);
          }
          const Eigen::Vector3d step = J.colPivHouseholderQr().solve(-F);
          if (!step.allFinite()) break;
          double lambda = 1.0;
          bool improved = false;
          for (int halving = 0; halving < 30; ++halving) {
            GeodesicParams trial{g.alpha + lambda * step[0], g.theta + lambda * step[1],
                                 g.s + lambda * step[2]};
            trial = canonical(trial);
            const Eigen::Vector3d Ft = residual_vec(trial, target);
            const double nt = Ft.lpNorm<Eigen::Infinity>();
            if (nt < norm) {
              g = trial;
              F = Ft;
              norm = nt;
              improved = true;
              break;
            }
            lambda *= 0.5;
          }
          if (!improved) break;
        }
        if (norm >= opt.tolerance || g.s > opt.max_length + 1e-9) continue;
        g = canonical(g);
        const bool seen = std::any_of(roots.begin(), roots.end(),
                                      [&](const GeodesicParams& r) { return same_geodesic(r, g); });
        if (!seen) roots.push_back(g);
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](const GeodesicParams& a, const GeodesicParams& b) {
    if (std::abs(a.s - b.s) > 1e-10) return a.s < b.s;
    if (std::abs(std::abs(a.theta) - std::abs(b.theta)) > 1e-12)
      return std::abs(a.theta) < std::abs(b.theta);
    return a.alpha < b.alpha;
  });
  return roots;
}

GeodesicSolveResult geodesic_between_shooting(const NilPoint& p1, const NilPoint& p2,
                                              const ShootingOptions& options) {
  const NilPoint q = translate(p2, inverse(translation_to(p1)));
  const auto roots = shoot_geodesics(q, options);
  if (roots.empty())
    throw NoSolution("geodesic_between_shooting: no start converged to a geodesic <= 2*pi");
  GeodesicSolveResult out;
  out.params = roots.front();
  out.residual = max_abs_diff(geodesic_point(out.params), q);
  out.branch_count = static_cast<int>(roots.size());
  return out;
}

}  // namespace nilcover
