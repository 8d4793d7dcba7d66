#pragma once

// Discrete translation groups L(τ1, τ2, k), their point lattices and the
// Nil parallelepiped fundamental domain.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcover/core.hpp"

namespace nilcover {

struct LatticeBasis {
  Translation t1;
  Translation t2;
  int k = 1;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// The generated group, with τ1 rotated onto the (x, z) plane (t1² = 0).
///
/// The rotation about the z axis is a Nil isometry fixing the origin, so the
/// rotated lattice has the same covering radius, density and domain volume.
class Lattice {
public:
  /// Throws DegenerateLattice if the projections of τ1 and τ2 are parallel
  /// (or any parameter is non-finite), DomainError if k < 1.
  explicit Lattice(const LatticeBasis& input);

  const LatticeBasis& input() const { return input_; }
  /// Normalized generators: basis().t1.t2 == 0.
  const LatticeBasis& basis() const { return basis_; }
  /// Rotation angle carrying the input basis to basis().
  double rotation() const { return rotation_; }
  int k() const { return basis_.k; }

  /// Signed fibre component of the commutator, t1¹t2² - t2¹t1².
  double commutator_fibre() const { return fibre_; }
  /// τ3 = (0, 0, commutator_fibre / k).
  Translation tau3() const { return {0.0, 0.0, fibre_ / basis_.k}; }

private:
  LatticeBasis input_;
  LatticeBasis basis_;
  double rotation_ = 0.0;
  double fibre_ = 0.0;
};

Lattice lattice_from_params(const LatticeBasis& basis);

/// Vertices of the Nil parallelepiped F, in the order
/// O, T1, T2, T3, T12, T21, T23, T213, T13.
struct FundamentalDomain {
  static constexpr std::array<const char*, 9> kLabels = {"O",   "T1",  "T2",   "T3", "T12",
                                                         "T21", "T23", "T213", "T13"};
  std::array<NilPoint, 9> vertices;

  const NilPoint& O() const { return vertices[0]; }
  const NilPoint& T1() const { return vertices[1]; }
  const NilPoint& T2() const { return vertices[2]; }
  const NilPoint& T3() const { return vertices[3]; }
  const NilPoint& T12() const { return vertices[4]; }
  const NilPoint& T21() const { return vertices[5]; }
  const NilPoint& T23() const { return vertices[6]; }
  const NilPoint& T213() const { return vertices[7]; }
  const NilPoint& T13() const { return vertices[8]; }
};

FundamentalDomain fundamental_domain(const Lattice& lattice);

/// Volume of a fundamental domain: A·(A/k) with A = |t1¹t2² - t2¹t1²|.
double domain_volume(const Lattice& lattice);

/// The group element τ2^b τ1^a τ3^c (applied in that order), as the image
/// of the origin.
NilPoint lattice_point(const Lattice& lattice, int a, int b, int c);

/// Orbit points of the origin for exponents |a|, |b|, |c| ≤ n, in
/// lexicographic order of (a, b, c), duplicates within 1e-10 removed.
std::vector<NilPoint> lattice_points_in_shell(const Lattice& lattice, int n);

using Tetrahedron = std::array<NilPoint, 4>;

/// Labels of the six tetrahedra filling the prism P = O T1 T12 T2 T3 T13 T21 T23.
inline constexpr std::array<std::array<const char*, 4>, 6> kTetrahedronLabels = {{
    {"O", "T1", "T2", "T3"},
    {"T3", "T1", "T23", "T13"},
    {"T3", "T1", "T23", "T2"},
    {"T12", "T1", "T23", "T2"},
    {"T1", "T12", "T21", "T23"},
    {"T1", "T21", "T23", "T13"},
}};

/// The six tetrahedra of kTetrahedronLabels. Their union is the prism P,
/// a fundamental domain of L(τ1, τ2, 1); for k > 1 the tetrahedra still
/// span the k = 1 prism.
std::array<Tetrahedron, 6> prism_tetrahedra(const FundamentalDomain& domain);

/// Membership in the prism P = {p : (p.x, p.y) in the parallelogram
/// O T1 T12 T2, p.z between the planar bottom face O T1 T12 T2 and the same
/// face raised by τ3}. `margin` > 0 shrinks the prism by that fraction of
/// each edge (strict interior test).
bool in_prism(const Lattice& lattice, const NilPoint& p, double margin = 0.0);

struct BoundingBox {
  NilPoint lo;
  NilPoint hi;
};

BoundingBox prism_bounding_box(const Lattice& lattice);

struct TilingReport {
  int samples = 0;
  int violations = 0;  ///< points covered by zero or several translates
  int max_cover = 0;
  int min_cover = 0;
};

/// Draws `samples` pseudo-random points (fixed seed) in the bounding box of
/// the prism and counts, for each, the shell-2k group elements g with
/// p·g⁻¹ in the interior of the prism. Exactly one is expected.
TilingReport tiling_spot_check(const Lattice& lattice, int samples, std::uint64_t seed = 20240521);

}  // namespace nilcover
