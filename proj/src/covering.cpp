#include <algorithm>
#include <cmath>
#include <limits>

#include "nilcover/ball.hpp"
#include "nilcover/covering.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/geodesic.hpp"

namespace nilcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double radical_inverse(unsigned base, unsigned index) {
  double inv = 1.0 / base;
  double factor = inv;
  double out = 0.0;
  while (index > 0) {
    out += factor * (index % base);
    index /= base;
    factor *= inv;
  }
  return out;
}

void require_k1(const Lattice& lattice, const char* what) {
  if (lattice.k() != 1) throw DomainError(std::string(what) + " is defined for k = 1 lattices only");
}

std::array<Tetrahedron, 6> tetrahedra(const Lattice& lattice) {
  return prism_tetrahedra(fundamental_domain(lattice));
}

// Distance from p to the nearest of `nodes`, infinite beyond 2π. The
// horizontal projection is distance non-increasing, which prunes the search.
double nearest_distance(const NilPoint& p, const std::vector<NilPoint>& nodes) {
  double best = kInf;
  for (const NilPoint& q : nodes) {
    if (std::hypot(q.x - p.x, q.y - p.y) >= best) continue;
    if (const auto d = try_distance(p, q)) best = std::min(best, *d);
  }
  return best;
}

}  // namespace

CoverageCheck verify_covering(const Lattice& lattice, double R, int n_samples) {
  if (!(R > 0.0 && R <= kMaxRadius)) throw DomainError("verify_covering: R must lie in (0, 2*pi]");
  if (n_samples < 0) throw DomainError("verify_covering: n_samples must be >= 0");
  const std::vector<NilPoint> nodes = lattice_points_in_shell(lattice, 2);

  std::vector<NilPoint> samples;
  if (lattice.k() == 1)
    for (const Tetrahedron& t : tetrahedra(lattice)) {
      try {
        samples.push_back(circumball(t).center);
      } catch (const std::runtime_error&) {
        // A tetrahedron without circumball contributes no extra sample.
      }
    }

  const BoundingBox box = prism_bounding_box(lattice);
  unsigned index = 1;
  const std::size_t target = samples.size() + static_cast<std::size_t>(n_samples);
  const unsigned max_index = 1000u * static_cast<unsigned>(std::max(n_samples, 1));
  while (samples.size() < target && index < max_index) {
    const NilPoint p{box.lo.x + (box.hi.x - box.lo.x) * radical_inverse(2, index),
                     box.lo.y + (box.hi.y - box.lo.y) * radical_inverse(3, index),
                     box.lo.z + (box.hi.z - box.lo.z) * radical_inverse(5, index)};
    ++index;
    if (in_prism(lattice, p)) samples.push_back(p);
  }

  CoverageCheck out;
  out.samples = static_cast<int>(samples.size());
  out.witness_distance = -kInf;
  for (const NilPoint& p : samples) {
    const double d = nearest_distance(p, nodes);
    if (d > out.witness_distance) {
      out.witness_distance = d;
      out.witness = p;
    }
  }
  out.covered = out.witness_distance <= R;
  return out;
}

double covering_radius(const Lattice& lattice) {
  require_k1(lattice, "covering_radius");
  double r = 0.0;
  for (const Tetrahedron& t : tetrahedra(lattice)) r = std::max(r, circumball(t).radius);
  return r;
}

CoveringRadius validated_covering_radius(const Lattice& lattice, int n_samples) {
  CoveringRadius out;
  out.tetrahedra_radius = covering_radius(lattice);
  out.radius = out.tetrahedra_radius;
  const CoverageCheck check =
      verify_covering(lattice, std::min(out.tetrahedra_radius * (1.0 + 1e-6), kMaxRadius), n_samples);
  out.validated = check.covered;
  if (!check.covered) {
    if (!(check.witness_distance <= kMaxRadius))
      throw NoSolution("covering radius exceeds 2*pi: balls do not cover the fundamental domain");
    out.radius = check.witness_distance;
  }
  return out;
}

DensityReport covering_density(const Lattice& lattice, std::string provenance, int n_samples) {
  const CoveringRadius cr = validated_covering_radius(lattice, n_samples);
  DensityReport r;
  r.lattice = lattice.basis();
  r.provenance = std::move(provenance);
  r.covering_radius = cr.radius;
  r.ball_volume = ball_volume(cr.radius);
  r.domain_volume = domain_volume(lattice);
  r.density = r.ball_volume / r.domain_volume;
  r.verified = cr.validated;
  return r;
}

NilPoint equidistant_projection(const NilPoint& p, double fibre) {
  return {p.x, p.y, 0.5 * (fibre + p.x * p.y)};
}

NilPoint equidistant_projection(const NilPoint& p, const Lattice& lattice) {
  return equidistant_projection(p, lattice.commutator_fibre());
}

}  // namespace nilcover
