#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "nilcover/ball.hpp"
#include "nilcover/covering.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/geodesic.hpp"

namespace nilcover {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string hex_provenance(double t11) { return "hexagonal family, t11 = " + std::to_string(t11); }

}  // namespace

LatticeBasis hex_family_lattice(double t11) {
  if (!(t11 > 0.0) || !std::isfinite(t11)) throw DomainError("hex_family_lattice: t11 must be > 0");
  LatticeBasis b;
  b.t1 = {t11, 0.0, kSqrt3 * t11 * t11 / 4.0};
  b.t2 = {0.5 * t11, 0.5 * kSqrt3 * t11, 3.0 * kSqrt3 * t11 * t11 / 8.0};
  b.k = 1;
  return b;
}

HexPoint hex_density_value(double t11) {
  const Lattice lattice(hex_family_lattice(t11));
  const FundamentalDomain d = fundamental_domain(lattice);
  HexPoint out;
  out.t11 = t11;
  out.ball = circumball({d.O(), d.T1(), d.T2(), d.T3()});
  const double area = t11 * t11 * kSqrt3 / 2.0;
  out.density = ball_volume(out.ball.radius) / (area * area);
  return out;
}

DensityReport hex_density(double t11, int n_samples) {
  const HexPoint hp = hex_density_value(t11);
  const Lattice lattice(hex_family_lattice(t11));
  DensityReport r;
  r.lattice = lattice.basis();
  r.provenance = hex_provenance(t11);
  r.covering_radius = hp.ball.radius;
  r.ball_volume = ball_volume(hp.ball.radius);
  r.domain_volume = domain_volume(lattice);
  r.density = hp.density;
  if (n_samples > 0)
    r.verified = verify_covering(lattice, std::min(hp.ball.radius * (1.0 + 1e-6), kMaxRadius), n_samples).covered;
  return r;
}

HexOptimum optimize_hex(double lo, double hi, int n_samples) {
  if (!(lo > 0.0 && lo < hi)) throw DomainError("optimize_hex: bracket must satisfy 0 < lo < hi");
  const auto [t11, density] = boost::math::tools::brent_find_minima(
      [](double t) { return hex_density_value(t).density; }, lo, hi, 40);
  const HexPoint hp = hex_density_value(t11);
  HexOptimum out;
  out.t11 = t11;
  out.radius = hp.ball.radius;
  out.density = hp.density;
  out.ball = hp.ball;
  out.lattice = hex_family_lattice(t11);
  if (n_samples > 0)
    out.verified = verify_covering(Lattice(out.lattice), out.radius * (1.0 + 1e-4), n_samples).covered;
  (void)density;
  return out;
}

}  // namespace nilcover
