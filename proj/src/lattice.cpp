#include "nilcover/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nilcover/errors.hpp"

namespace nilcover {

namespace {

Translation rotate_translation(const Translation& tau, double omega) {
  // Rotations about the z axis through O are automorphisms of the group, so
  // the conjugate of a translation is the translation to the rotated point.
  return translation_to(rotate_z({tau.t1, tau.t2, tau.t3}, omega));
}

Translation power(const Translation& tau, int n) {
  const Translation step = n >= 0 ? tau : inverse(tau);
  Translation out{};
  for (int i = 0; i < std::abs(n); ++i) out = compose(out, step);
  return out;
}

// Coordinates of a horizontal point in the basis of the projected generators,
// and the height above the bottom face, as fractions of the column height.
struct PrismCoords {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

PrismCoords prism_coords(const Lattice& lattice, const NilPoint& p) {
  const LatticeBasis& b = lattice.basis();
  const double det = b.t1.t1 * b.t2.t2 - b.t2.t1 * b.t1.t2;
  const double u = (p.x * b.t2.t2 - p.y * b.t2.t1) / det;
  const double v = (b.t1.t1 * p.y - b.t1.t2 * p.x) / det;
  // The bottom face O T1 T12 T2 is the plane through O spanned by T1, T2.
  const double bottom = u * b.t1.t3 + v * b.t2.t3;
  return {u, v, (p.z - bottom) / lattice.tau3().t3};
}

}  // namespace

Lattice::Lattice(const LatticeBasis& input) : input_(input) {
  if (!is_finite(input.t1) || !is_finite(input.t2))
    throw DegenerateLattice("lattice basis has non-finite parameters");
  if (input.k < 1) throw DomainError("lattice parameter k must be >= 1");

  rotation_ = -std::atan2(input.t1.t2, input.t1.t1);
  basis_.k = input.k;
  basis_.t1 = rotate_translation(input.t1, rotation_);
  basis_.t1.t2 = 0.0;
  basis_.t2 = rotate_translation(input.t2, rotation_);
  fibre_ = commutator(basis_.t1, basis_.t2).t3;

  const double scale = std::hypot(input.t1.t1, input.t1.t2) * std::hypot(input.t2.t1, input.t2.t2);
  if (!(std::abs(fibre_) > 1e-12 * scale) || scale == 0.0)
    throw DegenerateLattice("generators have parallel projections (commutator fibre is zero)");
}

Lattice lattice_from_params(const LatticeBasis& basis) { return Lattice(basis); }

FundamentalDomain fundamental_domain(const Lattice& lattice) {
  const LatticeBasis& b = lattice.basis();
  const double t11 = b.t1.t1, t13 = b.t1.t3;
  const double t21 = b.t2.t1, t22 = b.t2.t2, t23 = b.t2.t3;
  const double h = t11 * t22 / b.k;
  const double k = b.k;
  FundamentalDomain d;
  d.vertices = {{
      {0.0, 0.0, 0.0},
      {t11, 0.0, t13},
      {t21, t22, t23},
      {0.0, 0.0, h},
      {t11 + t21, t22, t23 + t13},
      {t11 + t21, t22, t11 * t22 + t13 + t23},
      {t21, t22, t23 + h},
      {t11 + t21, t22, (k + 1.0) * h + t13 + t23},
      {t11, 0.0, h + t13},
  }};
  return d;
}

double domain_volume(const Lattice& lattice) {
  const double area = std::abs(lattice.commutator_fibre());
  return area * (area / lattice.k());
}

NilPoint lattice_point(const Lattice& lattice, int a, int b, int c) {
  const LatticeBasis& basis = lattice.basis();
  const Translation g =
      compose(compose(power(basis.t2, b), power(basis.t1, a)), power(lattice.tau3(), c));
  return translate(kOrigin, g);
}

std::vector<NilPoint> lattice_points_in_shell(const Lattice& lattice, int n) {
  if (n < 0) throw DomainError("shell index must be >= 0");
  std::vector<NilPoint> out;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b)
      for (int c = -n; c <= n; ++c) {
        const NilPoint p = lattice_point(lattice, a, b, c);
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const NilPoint& q) { return max_abs_diff(p, q) <= 1e-10; });
        if (!seen) out.push_back(p);
      }
  return out;
}

std::array<Tetrahedron, 6> prism_tetrahedra(const FundamentalDomain& domain) {
  std::array<Tetrahedron, 6> out;
  for (std::size_t t = 0; t < kTetrahedronLabels.size(); ++t) {
    for (std::size_t v = 0; v < 4; ++v) {
      const std::string label = kTetrahedronLabels[t][v];
      const auto it = std::find_if(FundamentalDomain::kLabels.begin(), FundamentalDomain::kLabels.end(),
                                   [&](const char* l) { return label == l; });
      out[t][v] = domain.vertices[static_cast<std::size_t>(it - FundamentalDomain::kLabels.begin())];
    }
  }
  return out;
}

bool in_prism(const Lattice& lattice, const NilPoint& p, double margin) {
  const PrismCoords c = prism_coords(lattice, p);
  auto inside = [margin](double t) { return t > margin && t < 1.0 - margin; };
  return inside(c.u) && inside(c.v) && inside(c.w);
}

BoundingBox prism_bounding_box(const Lattice& lattice) {
  const FundamentalDomain d = fundamental_domain(lattice);
  const double h = lattice.tau3().t3;
  BoundingBox box{d.O(), d.O()};
  for (const NilPoint& base : {d.O(), d.T1(), d.T12(), d.T2()}) {
    for (const NilPoint& p : {base, NilPoint{base.x, base.y, base.z + h}}) {
      box.lo = {std::min(box.lo.x, p.x), std::min(box.lo.y, p.y), std::min(box.lo.z, p.z)};
      box.hi = {std::max(box.hi.x, p.x), std::max(box.hi.y, p.y), std::max(box.hi.z, p.z)};
    }
  }
  return box;
}

TilingReport tiling_spot_check(const Lattice& lattice, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("tiling_spot_check needs at least one sample");
  const BoundingBox box = prism_bounding_box(lattice);
  std::vector<Translation> group;
  for (const NilPoint& p : lattice_points_in_shell(lattice, 2 * lattice.k())) group.push_back(translation_to(p));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kBoundary = 1e-9;

  TilingReport report;
  report.min_cover = static_cast<int>(group.size());
  while (report.samples < samples) {
    const NilPoint p{box.lo.x + (box.hi.x - box.lo.x) * unit(rng),
                     box.lo.y + (box.hi.y - box.lo.y) * unit(rng),
                     box.lo.z + (box.hi.z - box.lo.z) * unit(rng)};
    int strict = 0;
    int loose = 0;
    for (const Translation& g : group) {
      const NilPoint q = translate(p, inverse(g));
      strict += in_prism(lattice, q, kBoundary) ? 1 : 0;
      loose += in_prism(lattice, q, -kBoundary) ? 1 : 0;
    }
    if (strict != loose) continue;  // on a shared face; jitter by redrawing
    ++report.samples;
    report.max_cover = std::max(report.max_cover, strict);
    report.min_cover = std::min(report.min_cover, strict);
    if (strict != 1) ++report.violations;
  }
  return report;
}

}  // namespace nilcover
