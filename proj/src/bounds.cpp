#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "nilcover/ball.hpp"
#include "nilcover/covering.hpp"
#include "nilcover/errors.hpp"

namespace nilcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-12;

void require_interval(double R, double lo, double hi, const char* name) {
  if (!(R >= lo - kSlack && R <= hi + kSlack))
    throw DomainError(std::string(name) + ": R = " + std::to_string(R) + " outside its interval");
}

// Profile angle with X(Rp, θ) = radius, for 0 ≤ radius ≤ Rp ≤ π/2, where X
// decreases from Rp to 0 on [0, π/2].
double profile_angle_at(double Rp, double radius) {
  if (radius >= Rp) return 0.0;
  if (radius <= 0.0) return 0.5 * kPi;
  auto f = [&](double t) { return sphere_profile(Rp, t).X - radius; };
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, 0.0, 0.5 * kPi, Rp - radius, -radius, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (a + b);
}

// The symmetric configuration with T1 at height y = hy on the equator.
struct Candidate {
  double hx = 0.0;
  double t1x = 0.0;
  double theta = 0.0;
  double OT3 = 0.0;
  double twice_area = 0.0;
};

Candidate candidate(double Rp, double hy) {
  Candidate c;
  c.t1x = std::sqrt(std::max(0.0, Rp * Rp - hy * hy));
  const double dy = Rp - hy;
  // H T1 = H T2 with H = (hx, hy): (t1x - hx)² = hx² + dy².
  c.hx = (c.t1x * c.t1x - dy * dy) / (2.0 * c.t1x);
  c.theta = profile_angle_at(Rp, std::hypot(c.hx, hy));
  c.OT3 = 2.0 * sphere_profile(Rp, c.theta).Z;
  c.twice_area = std::abs(c.t1x - c.hx) * dy;
  return c;
}

double mismatch(double Rp, double hy) {
  const Candidate c = candidate(Rp, hy);
  return c.OT3 - c.twice_area;
}

}  // namespace

double bound_f(double R) {
  require_interval(R, 0.5 * kPi, kPi, "bound_f");
  return ball_volume(R) / (4.0 * R * R);
}

double bound_f1(double R) {
  require_interval(R, kPi, 1.5 * kPi, "bound_f1");
  return ball_volume(R) / (kChordH1 * kChordH1);
}

double bound_f2(double R) {
  require_interval(R, 1.5 * kPi, 2.0 * kPi, "bound_f2");
  return ball_volume(std::min(R, 2.0 * kPi)) / (kChordH2 * kChordH2);
}

LowerBoundConfig lower_bound_density(double Rp) {
  if (!(Rp > 0.0 && Rp <= 0.5 * kPi + kSlack))
    throw DomainError("lower_bound_density: Rp must lie in (0, pi/2]");
  Rp = std::min(Rp, 0.5 * kPi);

  // T1 runs over the equator below T2; H must stay inside the disc.
  constexpr int kScan = 800;
  const double lo = -Rp * (1.0 - 1e-9);
  const double hi = Rp * (1.0 - 1e-9);
  bool found = false;
  double best_hy = 0.0;
  double best_OT3 = -1.0;
  double prev_hy = lo;
  double prev = mismatch(Rp, lo);
  for (int i = 1; i <= kScan; ++i) {
    const double hy = lo + (hi - lo) * i / kScan;
    const double cur = mismatch(Rp, hy);
    if (std::isfinite(prev) && std::isfinite(cur) && (prev == 0.0 || prev * cur < 0.0)) {
      double root = prev_hy;
      if (prev != 0.0) {
        std::uintmax_t iters = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(
            [&](double y) { return mismatch(Rp, y); }, prev_hy, hy, prev, cur,
            boost::math::tools::eps_tolerance<double>(52), iters);
        root = 0.5 * (a + b);
      }
      const double ot3 = candidate(Rp, root).OT3;
      if (ot3 > best_OT3) {
        best_OT3 = ot3;
        best_hy = root;
        found = true;
      }
    }
    prev_hy = hy;
    prev = cur;
  }
  if (!found) throw NoSolution("lower_bound_density: consistency equation has no root");

  const Candidate c = candidate(Rp, best_hy);
  LowerBoundConfig cfg;
  cfg.Rp = Rp;
  cfg.chord_theta = c.theta;
  cfg.OT3 = c.OT3;
  cfg.H = {c.hx, best_hy, 0.0};
  cfg.T1p = {c.t1x, best_hy, 0.0};
  cfg.T2p = {0.0, Rp, 0.0};
  cfg.density = ball_volume(Rp) / (c.OT3 * c.OT3);

  // Lattice seen from H: T1 and T2 become the projections of the generators,
  // which lie on the equidistant surface 2z - xy = t1¹t2².
  const double t11 = c.t1x - c.hx;
  const double t21 = -c.hx;
  const double t22 = Rp - best_hy;
  const double h = t11 * t22;
  cfg.lattice.t1 = {t11, 0.0, 0.5 * h};
  cfg.lattice.t2 = {t21, t22, 0.5 * (h + t21 * t22)};
  cfg.lattice.k = 1;
  return cfg;
}

LowerBoundMinimum minimize_lower_bound(double lo, double hi) {
  if (!(lo > 0.0 && lo < hi && hi <= 0.5 * kPi + kSlack))
    throw DomainError("minimize_lower_bound: bracket must satisfy 0 < lo < hi <= pi/2");
  const auto [rp, density] = boost::math::tools::brent_find_minima(
      [](double r) { return lower_bound_density(r).density; }, lo, std::min(hi, 0.5 * kPi), 30);
  LowerBoundMinimum out;
  out.config = lower_bound_density(rp);
  out.Rp = rp;
  out.density = density;
  return out;
}

}  // namespace nilcover
