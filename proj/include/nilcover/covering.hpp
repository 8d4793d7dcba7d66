#pragma once

// Circumscribed balls, covering radii and densities of lattice-like ball
// coverings, the chord bound functions, the lower-bound construction and the
// hexagonal lattice family.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "nilcover/core.hpp"
#include "nilcover/lattice.hpp"

namespace nilcover {

/// Density of the thinnest Euclidean lattice covering by balls, 5√5π/24.
inline const double kEuclideanCoveringDensity = 5.0 * std::sqrt(5.0) * std::numbers::pi / 24.0;

// ---------------------------------------------------------------- circumball

struct CircumballResult {
  NilPoint center;
  double radius = 0.0;
  double residual = 0.0;  ///< max_i |d(center, p_i) - radius|
};

struct CircumballOptions {
  double tolerance = 1e-8;  ///< accepted residual
  int max_iterations = 60;
};

/// Geodesic ball through four points: solves d(C, p_i) = R by damped Newton
/// over (C, R) from a 3×3×3×4 start grid and keeps the smallest root.
/// Throws NoSolution if no start converges, DegenerateConfiguration if the
/// Jacobian is singular at every start.
CircumballResult circumball(const std::array<NilPoint, 4>& points,
                            const CircumballOptions& options = {});

// ------------------------------------------------------------------ covering

struct CoverageCheck {
  bool covered = false;
  int samples = 0;             ///< points tested
  NilPoint witness;            ///< sample farthest from the lattice
  double witness_distance = 0;  ///< its distance to the nearest lattice point (inf beyond 2π)
};

inline constexpr int kDefaultCoverageSamples = 20000;

/// Tests whether balls of radius R about the lattice points (shell n = 2)
/// cover the prism fundamental domain. Samples are the Halton points of the
/// prism's bounding box that fall inside it, plus the circumcentres of the
/// six tetrahedra, where the covering is tightest.
CoverageCheck verify_covering(const Lattice& lattice, double R,
                              int n_samples = kDefaultCoverageSamples);

/// Largest circumradius among the six tetrahedra of the prism decomposition.
/// Requires k = 1.
double covering_radius(const Lattice& lattice);

struct CoveringRadius {
  double tetrahedra_radius = 0.0;  ///< covering_radius()
  double radius = 0.0;             ///< validated radius
  bool validated = false;          ///< the tetrahedra radius passed verify_covering
};

/// covering_radius() checked by verify_covering at radius·(1 + 1e-6). When the
/// check fails the radius is grown to the sampled covering radius (the
/// farthest sample's distance), and `validated` is false.
CoveringRadius validated_covering_radius(const Lattice& lattice,
                                         int n_samples = kDefaultCoverageSamples);

struct DensityReport {
  LatticeBasis lattice;
  std::string provenance;
  double covering_radius = 0.0;
  double ball_volume = 0.0;
  double domain_volume = 0.0;
  double density = 0.0;
  bool verified = false;
};

DensityReport covering_density(const Lattice& lattice, std::string provenance = "user",
                               int n_samples = kDefaultCoverageSamples);

/// Vertical projection onto the equidistant surface 2z - xy = fibre.
NilPoint equidistant_projection(const NilPoint& p, double fibre);
NilPoint equidistant_projection(const NilPoint& p, const Lattice& lattice);

// -------------------------------------------------------------------- bounds

inline constexpr double kChordH1 = 13.0 * std::numbers::pi / 4.0;
inline constexpr double kChordH2 = 5.0 * std::numbers::pi;

/// Vol B(R) / (2R)² on [π/2, π].
double bound_f(double R);
/// Vol B(R) / (13π/4)² on [π, 3π/2].
double bound_f1(double R);
/// Vol B(R) / (5π)² on [3π/2, 2π].
double bound_f2(double R);

/// Extremal symmetric configuration of the lower-bound construction, in the
/// M-image with the ball centred at the origin. H is the foot of the fibre
/// chord O'T3', T1 and T2 lie on the equator circle with T2 at its top.
struct LowerBoundConfig {
  double Rp = 0.0;
  double chord_theta = 0.0;  ///< profile angle with X(Rp, θ) = |H|
  double OT3 = 0.0;          ///< 2 Z(Rp, θ)
  NilPoint H;
  NilPoint T1p;
  NilPoint T2p;
  double density = 0.0;  ///< ball_volume(Rp) / OT3²
  LatticeBasis lattice;  ///< lattice realizing the configuration
};

/// Builds the configuration for Rp ∈ (0, π/2]: solves OT3 = 2·Area(H T1 T2)
/// along the symmetric family (parametrized by the height of T1) and keeps
/// the root with the largest OT3. Throws NoSolution if there is none.
LowerBoundConfig lower_bound_density(double Rp);

struct LowerBoundMinimum {
  LowerBoundConfig config;
  double Rp = 0.0;
  double density = 0.0;
};

/// Brent minimization of lower_bound_density over [lo, hi] ⊂ (0, π/2].
LowerBoundMinimum minimize_lower_bound(double lo = 0.3, double hi = std::numbers::pi / 2);

// ------------------------------------------------------------ hexagonal family

/// τ1 = (a, 0, √3a²/4), τ2 = (a/2, √3a/2, 3√3a²/8), k = 1: regular hexagonal
/// projection with T1 and T2 on the equidistant surface.
LatticeBasis hex_family_lattice(double t11);

/// Circumradius of {O, T1, T2, T3} and the density it gives.
struct HexPoint {
  double t11 = 0.0;
  CircumballResult ball;
  double density = 0.0;
};
HexPoint hex_density_value(double t11);

/// hex_density_value() as a full report; `verified` comes from verify_covering
/// at R·(1 + 1e-6) when n_samples > 0.
DensityReport hex_density(double t11, int n_samples = kDefaultCoverageSamples);

struct HexOptimum {
  double t11 = 0.0;
  double radius = 0.0;
  double density = 0.0;
  CircumballResult ball;
  LatticeBasis lattice;
  bool verified = false;  ///< verify_covering at radius·(1 + 1e-4)
};

/// Brent minimization of the hexagonal-family density over t11 ∈ [lo, hi].
HexOptimum optimize_hex(double lo = 0.8, double hi = 1.8,
                        int n_samples = kDefaultCoverageSamples);

}  // namespace nilcover
