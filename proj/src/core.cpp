#include "nilcover/core.hpp"

#include <algorithm>
#include <cmath>

namespace nilcover {

bool is_finite(const NilPoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

bool is_finite(const Translation& t) {
  return std::isfinite(t.t1) && std::isfinite(t.t2) && std::isfinite(t.t3);
}

double max_abs_diff(const NilPoint& a, const NilPoint& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double max_abs_diff(const Translation& a, const Translation& b) {
  return std::max({std::abs(a.t1 - b.t1), std::abs(a.t2 - b.t2), std::abs(a.t3 - b.t3)});
}

NilPoint translate(const NilPoint& p, const Translation& tau) {
  return {p.x + tau.t1, p.y + tau.t2, tau.t3 + p.y * tau.t1 + p.z};
}

Translation compose(const Translation& a, const Translation& b) {
  return {a.t1 + b.t1, a.t2 + b.t2, a.t3 + b.t3 + a.t2 * b.t1};
}

Translation inverse(const Translation& tau) {
  return {-tau.t1, -tau.t2, tau.t1 * tau.t2 - tau.t3};
}

Translation translation_to(const NilPoint& p) { return {p.x, p.y, p.z}; }

Translation commutator(const Translation& tau1, const Translation& tau2) {
  return {0.0, 0.0, tau1.t1 * tau2.t2 - tau2.t1 * tau1.t2};
}

double normalize_angle(double omega) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(omega, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  if (r > std::numbers::pi) r -= two_pi;
  return r;
}

NilPoint rotate_z(const NilPoint& p, double omega) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  const double c2 = std::cos(2.0 * omega);
  const double s2 = std::sin(2.0 * omega);
  return {p.x * c - p.y * s, p.x * s + p.y * c,
          p.z - 0.5 * p.x * p.y + 0.25 * (p.x * p.x - p.y * p.y) * s2 + 0.5 * p.x * p.y * c2};
}

NilPoint m_map(const NilPoint& p) { return {p.x, p.y, p.z - 0.5 * p.x * p.y}; }

NilPoint m_inverse(const NilPoint& p) { return {p.x, p.y, p.z + 0.5 * p.x * p.y}; }

NilPoint linear_rotation(const NilPoint& p, double omega) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  return {p.x * c - p.y * s, p.x * s + p.y * c, p.z};
}

NilPoint line_reflect_y(const NilPoint& p) { return {-p.x, p.y, -p.z}; }

NilPoint AffineMap::operator()(const NilPoint& p) const {
  const std::array<double, 3> v{p.x, p.y, p.z};
  std::array<double, 3> out{offset_.x, offset_.y, offset_.z};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i] += linear_[i][j] * v[j];
  return {out[0], out[1], out[2]};
}

AffineMap conjugated_translation(const Translation& tau) {
  // z picks up -x·Y/2 + y·X/2 on top of the constant Z - XY/2.
  const double X = tau.t1;
  const double Y = tau.t2;
  const double Z = tau.t3;
  return AffineMap({{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {-0.5 * Y, 0.5 * X, 1.0}}},
                   {X, Y, Z - 0.5 * X * Y});
}

NilIsometry NilIsometry::translation(const Translation& tau) {
  NilIsometry g;
  g.steps_.emplace_back(tau);
  return g;
}

NilIsometry NilIsometry::rotation(double omega) {
  NilIsometry g;
  g.steps_.emplace_back(Rotation{normalize_angle(omega)});
  return g;
}

NilIsometry NilIsometry::line_reflection_y() {
  NilIsometry g;
  g.steps_.emplace_back(LineReflectionY{});
  return g;
}

NilIsometry NilIsometry::then(const NilIsometry& next) const {
  NilIsometry g = *this;
  g.steps_.insert(g.steps_.end(), next.steps_.begin(), next.steps_.end());
  return g;
}

namespace {
struct ApplyStep {
  NilPoint p;
  NilPoint operator()(const Translation& tau) const { return translate(p, tau); }
  NilPoint operator()(const Rotation& r) const { return rotate_z(p, r.omega); }
  NilPoint operator()(const LineReflectionY&) const { return line_reflect_y(p); }
};
}  // namespace

NilPoint NilIsometry::operator()(const NilPoint& p) const {
  NilPoint q = p;
  for (const auto& step : steps_) q = std::visit(ApplyStep{q}, step);
  return q;
}

}  // namespace nilcover
