#pragma once

// Nil translations, rotations about the z axis, the y-axis line reflection
// and the quadratic map M, all acting on affine model coordinates (x, y, z).
// The homogeneous coordinate is always 1 and is not stored.

#include <array>
#include <numbers>
#include <variant>
#include <vector>

namespace nilcover {

struct NilPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const NilPoint&, const NilPoint&) = default;
};

inline constexpr NilPoint kOrigin{};

/// Translation with parameters (t1, t2, t3). Its matrix takes a point
/// (a, b, c) to (a + t1, b + t2, c + b·t1 + t3).
struct Translation {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;

  friend bool operator==(const Translation&, const Translation&) = default;
};

bool is_finite(const NilPoint& p);
bool is_finite(const Translation& t);

/// Largest absolute coordinate difference.
double max_abs_diff(const NilPoint& a, const NilPoint& b);
double max_abs_diff(const Translation& a, const Translation& b);

NilPoint translate(const NilPoint& p, const Translation& tau);

/// Group product: translating by compose(a, b) equals translating by a, then b.
Translation compose(const Translation& a, const Translation& b);

Translation inverse(const Translation& tau);

/// The translation carrying the origin to p.
Translation translation_to(const NilPoint& p);

/// tau2^-1 tau1^-1 tau2 tau1 applied in that order, a fibre translation
/// (0, 0, t1·s2 - s1·t2) for tau1 = (t1, t2, .), tau2 = (s1, s2, .).
Translation commutator(const Translation& tau1, const Translation& tau2);

/// Wraps an angle into (-π, π].
double normalize_angle(double omega);

/// Nil rotation by omega about the z axis through the origin.
NilPoint rotate_z(const NilPoint& p, double omega);

/// Quadratic map M: (x, y, z) -> (x, y, z - xy/2).
NilPoint m_map(const NilPoint& p);
NilPoint m_inverse(const NilPoint& p);

/// Euclidean rotation about the z axis, the M-conjugate of rotate_z.
NilPoint linear_rotation(const NilPoint& p, double omega);

/// Involutive isometry (x, y, z) -> (-x, y, -z).
NilPoint line_reflect_y(const NilPoint& p);

/// Affine map p -> A p + b on model coordinates.
class AffineMap {
public:
  AffineMap(const std::array<std::array<double, 3>, 3>& linear, const NilPoint& offset)
      : linear_(linear), offset_(offset) {}

  NilPoint operator()(const NilPoint& p) const;

  const std::array<std::array<double, 3>, 3>& linear() const { return linear_; }
  const NilPoint& offset() const { return offset_; }

private:
  std::array<std::array<double, 3>, 3> linear_;
  NilPoint offset_;
};

/// The translation tau seen through M, i.e. m_map ∘ translate(·, tau) ∘ m_inverse.
AffineMap conjugated_translation(const Translation& tau);

struct Rotation {
  double omega = 0.0;
};

struct LineReflectionY {};

using IsometryPrimitive = std::variant<Translation, Rotation, LineReflectionY>;

/// Word of isometry primitives, applied first to last. No normal form is
/// computed; evaluation walks the word.
class NilIsometry {
public:
  NilIsometry() = default;

  static NilIsometry translation(const Translation& tau);
  static NilIsometry rotation(double omega);
  static NilIsometry line_reflection_y();

  /// This isometry followed by `next`.
  NilIsometry then(const NilIsometry& next) const;

  NilPoint operator()(const NilPoint& p) const;

  const std::vector<IsometryPrimitive>& steps() const { return steps_; }

private:
  std::vector<IsometryPrimitive> steps_;
};

}  // namespace nilcover
