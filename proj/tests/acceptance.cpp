// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "nilcover/ball.hpp"
#include "nilcover/covering.hpp"
#include "nilcover/geodesic.hpp"
#include "oracles.hpp"

using namespace nilcover;

namespace {

constexpr double kPi = std::numbers::pi;
const LatticeBasis kOpt{{1.30633820, 0.0, 0.73894462}, {0.65316910, 1.13132206, 1.10841693}, 1};

struct Check {
  bool ok = true;
  std::string detail;

  void near(const char* name, double got, double want, double tol) {
    char buf[160];
    const bool pass = std::abs(got - want) <= tol;
    std::snprintf(buf, sizeof buf, "%s%s=%.10g", detail.empty() ? "" : ", ", name, got);
    detail += buf;
    if (!pass) {
      std::snprintf(buf, sizeof buf, " (want %.10g ± %.1g)", want, tol);
      detail += buf;
    }
    ok = ok && pass;
  }

  void that(const char* name, bool pass) {
    detail += (detail.empty() ? "" : ", ") + std::string(name) + (pass ? "" : " [failed]");
    ok = ok && pass;
  }
};

Check criterion1() {
  Check c;
  const FundamentalDomain d = fundamental_domain(Lattice(kOpt));
  const CircumballResult r = circumball({d.O(), d.T1(), d.T2(), d.T3()});
  c.near("Cx", r.center.x, 0.45981062, 1e-5);
  c.near("Cy", r.center.y, 0.26547179, 1e-5);
  c.near("Cz", r.center.z, 0.79997799, 1e-5);
  c.near("R", r.radius, 0.90293941, 1e-5);
  return c;
}

Check criterion2() {
  Check c;
  const DensityReport r = covering_density(Lattice(kOpt), "optimal packing");
  c.near("vol B", r.ball_volume, 3.12538516, 1e-5);
  c.near("vol F", r.domain_volume, 2.18415656, 1e-5);
  c.near("density", r.density, 1.43093459, 1e-5);
  c.that("verified", r.verified);
  return c;
}

Check criterion3() {
  Check c;
  const HexOptimum h = optimize_hex();
  c.near("t11", h.t11, 1.26001585, 1e-4);
  c.near("R", h.radius, 0.86046718, 1e-4);
  c.near("density", h.density, 1.42900615, 1e-5);
  c.near("t13", h.lattice.t1.t3, 0.68746826, 1e-5);
  c.near("t23", h.lattice.t2.t3, 1.03120239, 1e-5);
  c.that("covering verified at R(1+1e-4)", verify_covering(Lattice(h.lattice), h.radius * (1 + 1e-4)).covered);
  return c;
}

Check criterion4() {
  Check c;
  const LowerBoundMinimum m = minimize_lower_bound();
  const HexOptimum h = optimize_hex(0.8, 1.8, 0);
  c.near("min density", m.density, 1.36278112, 1e-4);
  c.near("Rp", m.Rp, 0.85847445, 1e-3);
  c.that("lower < hex min <= 1.42900615", m.density < h.density && h.density <= 1.42900615 + 1e-8);
  return c;
}

bool increasing(double (*f)(double), double lo, double hi) {
  double prev = f(lo);
  for (int i = 1; i <= 200; ++i) {
    const double v = f(lo + (hi - lo) * i / 200);
    if (!(v > prev)) return false;
    prev = v;
  }
  return true;
}

Check criterion5() {
  Check c;
  c.near("f(pi/2)", bound_f(kPi / 2), 1.71179510, 1e-5);
  c.near("f2(3pi/2)", bound_f2(1.5 * kPi), 2.372757787, 1e-5);
  c.near("f1(pi)", bound_f1(kPi), 1.441711246, 1e-3);
  c.that("f increasing", increasing(bound_f, kPi / 2, kPi));
  c.that("f1 increasing", increasing(bound_f1, kPi, 1.5 * kPi));
  c.that("f2 increasing", increasing(bound_f2, 1.5 * kPi, 2 * kPi));
  return c;
}

Check criterion6() {
  Check c;
  c.near("chord(3pi/2)", max_vertical_chord(1.5 * kPi), 13 * kPi / 4, 1e-6);
  c.near("chord(2pi)", max_vertical_chord(2 * kPi), 5 * kPi, 1e-6);
  c.near("Z(2pi,pi/6)", sphere_profile(2 * kPi, kPi / 6).Z, 2.5 * kPi, 1e-12);
  return c;
}

Check criterion7() {
  Check c;
  bool below = true;
  for (double R = 0.25; R <= kPi - 1e-3; R += 0.25) below = below && !profile_critical_angle(R).has_value();
  below = below && !profile_critical_angle(kPi).has_value();
  bool above = true;
  for (double R : {kPi + 0.05, 3.5, 4.5, 6.0}) above = above && profile_critical_angle(R).has_value();
  c.that("no interior critical point for R <= pi", below);
  c.that("critical point for R > pi", above);
  c.that("hull test passes at pi/2", scan_ball_convexity(kPi / 2).convex);
  c.that("hull test fails at 2.0", !scan_ball_convexity(2.0).convex);
  return c;
}

Check criterion8() {
  Check c;
  oracle::Gen gen(8);
  bool group = true;
  for (int i = 0; i < 1000; ++i) {
    const Translation a = gen.translation(10), b = gen.translation(10), d = gen.translation(10);
    group = group && max_abs_diff(compose(compose(a, b), d), compose(a, compose(b, d))) <= 1e-12 &&
            max_abs_diff(compose(a, inverse(a)), Translation{}) <= 1e-12 &&
            max_abs_diff(compose(inverse(a), a), Translation{}) <= 1e-12;
  }
  c.that("group laws", group);

  bool isometry = true;
  for (int i = 0; i < 200; ++i) {
    const NilPoint p = gen.point(1.0), q = gen.point(1.0);
    const auto d = try_distance(p, q);
    if (!d) continue;
    const Translation tau = gen.translation(3.0);
    const double w = gen.uniform(-kPi, kPi);
    for (double e : {distance(translate(p, tau), translate(q, tau)), distance(rotate_z(p, w), rotate_z(q, w)),
                     distance(line_reflect_y(p), line_reflect_y(q))})
      isometry = isometry && std::abs(e - *d) <= 1e-8 * std::max(1.0, *d);
  }
  c.that("distance isometry", isometry);

  bool speed = true, round_trip = true;
  for (int i = 0; i < 200; ++i) {
    const GeodesicParams g{gen.uniform(-kPi, kPi), gen.uniform(-kPi / 2, kPi / 2), gen.uniform(0.05, 0.99 * 2 * kPi)};
    constexpr double h = 1e-5;
    const NilPoint p = geodesic_point(g);
    const NilPoint f = geodesic_point({g.alpha, g.theta, g.s + h}), b = geodesic_point({g.alpha, g.theta, g.s - h});
    const NilPoint v{(f.x - b.x) / (2 * h), (f.y - b.y) / (2 * h), (f.z - b.z) / (2 * h)};
    speed = speed && std::abs(std::sqrt(oracle::metric_norm2(p, v)) - 1.0) <= 1e-6;
    const GeodesicSolveResult r = geodesic_between(kOrigin, p);
    round_trip = round_trip && std::abs(r.params.s - g.s) <= 1e-8 * g.s && max_abs_diff(geodesic_point(r.params), p) <= 1e-8;
  }
  c.that("unit speed", speed);
  c.that("inverse-geodesic round trip", round_trip);

  const double r = 0.01;
  c.that("small-R volume limit", std::abs(ball_volume(r) / (4.0 / 3.0 * kPi * r * r * r) - 1.0) <= 1e-3);

  bool tiling = true;
  for (const LatticeBasis& b : {kOpt, LatticeBasis{{1, 0, 0}, {0, 1, 0}, 1}, hex_family_lattice(1.26001585)})
    tiling = tiling && tiling_spot_check(Lattice(b), 1000).violations == 0;
  c.that("tiling spot checks", tiling);
  return c;
}

}  // namespace

int main() {
  using Criterion = Check (*)();
  const std::vector<Criterion> criteria{criterion1, criterion2, criterion3, criterion4,
                                        criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("Criterion %zu: %s (%s)\n", i + 1, c.ok ? "PASS" : "FAIL", c.detail.c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
