#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nilcover/core.hpp"
#include "oracles.hpp"

using namespace nilcover;

namespace {

void check_point(const NilPoint& a, const NilPoint& b, double tol = 1e-12) {
  CHECK(max_abs_diff(a, b) <= tol);
}

}  // namespace

TEST_SUITE("nil-core") {
  TEST_CASE("translate examples") {
    CHECK(translate(kOrigin, {1, 2, 3}) == NilPoint{1, 2, 3});
    CHECK(translate({0, 1, 0}, {1, 0, 0}) == NilPoint{1, 1, 1});
    CHECK(translate({0.3, -2, 5}, {}) == NilPoint{0.3, -2, 5});
  }

  TEST_CASE("translate agrees with the matrix action") {
    oracle::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
      const NilPoint p = gen.point(10);
      const Translation t = gen.translation(10);
      check_point(translate(p, t), oracle::act(p, oracle::translation_matrix(t)), 1e-12);
    }
  }

  TEST_CASE("compose examples and matrix oracle") {
    CHECK(compose({1, 0, 0}, {0, 1, 0}) == Translation{1, 1, 0});
    CHECK(compose({0, 1, 0}, {1, 0, 0}) == Translation{1, 1, 1});
    const Translation tau{0.4, -1.5, 2.25};
    CHECK(compose(tau, {}) == tau);
    CHECK(compose({}, tau) == tau);

    oracle::Gen gen(12);
    for (int i = 0; i < 200; ++i) {
      const Translation a = gen.translation(10), b = gen.translation(10);
      const auto m = oracle::multiply(oracle::translation_matrix(a), oracle::translation_matrix(b));
      const Translation c = compose(a, b);
      CHECK(std::abs(c.t1 - m[0][1]) <= 1e-12);
      CHECK(std::abs(c.t2 - m[0][2]) <= 1e-12);
      CHECK(std::abs(c.t3 - m[0][3]) <= 1e-12);
      CHECK(std::abs(m[2][3] - c.t1) <= 1e-12);  // the matrix keeps its translation shape
    }
  }

  TEST_CASE("inverse") {
    CHECK(inverse({0, 0, 2.5}) == Translation{0, 0, -2.5});
    CHECK(inverse({}) == Translation{});
    CHECK(compose({1, 1, 1}, inverse({1, 1, 1})) == Translation{});
    CHECK(compose(inverse({1, 1, 1}), {1, 1, 1}) == Translation{});
  }

  TEST_CASE("commutator") {
    CHECK(commutator({1, 0, 0}, {0, 1, 0}) == Translation{0, 0, 1});
    CHECK(commutator({0.7, 0.2, 3}, {0.7, 0.2, 3}) == Translation{0, 0, 0});
    CHECK(commutator({1.3, 0, 0.7}, {0.6, 1.1, 1.2}).t3 == doctest::Approx(1.3 * 1.1));

    // Equals the group word τ2⁻¹ τ1⁻¹ τ2 τ1 evaluated with the matrix oracle.
    oracle::Gen gen(13);
    for (int i = 0; i < 100; ++i) {
      const Translation a = gen.translation(5), b = gen.translation(5);
      using oracle::multiply, oracle::translation_matrix;
      const auto m = multiply(multiply(translation_matrix(inverse(b)), translation_matrix(inverse(a))),
                              multiply(translation_matrix(b), translation_matrix(a)));
      const Translation c = commutator(a, b);
      CHECK(std::abs(m[0][1]) <= 1e-12);
      CHECK(std::abs(m[0][2]) <= 1e-12);
      CHECK(std::abs(m[0][3] - c.t3) <= 1e-11);
    }
  }

  TEST_CASE("rotate_z examples") {
    CHECK(max_abs_diff(rotate_z({0, 0, 1.7}, 0.9), {0, 0, 1.7}) <= 1e-15);
    CHECK(rotate_z({0.3, -0.2, 0.5}, 0.0) == NilPoint{0.3, -0.2, 0.5});
    CHECK(max_abs_diff(rotate_z({1, 0, 0}, std::numbers::pi / 2), {0, 1, 0}) <= 1e-15);
  }

  TEST_CASE("m_map examples") {
    CHECK(m_map({0, 0, 4}) == NilPoint{0, 0, 4});
    CHECK(m_map({1, 1, 1}) == NilPoint{1, 1, 0.5});
    CHECK(m_map({2, 3, 0}) == NilPoint{2, 3, -3});
    CHECK(m_inverse(m_map({2, 3, 0})) == NilPoint{2, 3, 0});
  }

  TEST_CASE("conjugated translation") {
    const AffineMap fibre = conjugated_translation({0, 0, 2});
    CHECK(fibre({0.5, 0.25, 1}) == NilPoint{0.5, 0.25, 3});
    CHECK(max_abs_diff(conjugated_translation({1.5, 2, 3})(kOrigin), {1.5, 2, 3 - 1.5}) <= 1e-15);

    oracle::Gen gen(14);
    for (int i = 0; i < 200; ++i) {
      const Translation t = gen.translation(3);
      const NilPoint p = gen.point(3);
      CHECK(max_abs_diff(conjugated_translation(t)(p), m_map(translate(m_inverse(p), t))) <= 1e-13);
    }
  }

  TEST_CASE("line reflection") {
    CHECK(line_reflect_y({1, 2, 3}) == NilPoint{-1, 2, -3});
    CHECK(line_reflect_y({0, 4, 0}) == NilPoint{0, 4, 0});
    CHECK(line_reflect_y(line_reflect_y({0.1, 0.2, 0.3})) == NilPoint{0.1, 0.2, 0.3});
  }

  TEST_CASE("normalize_angle range") {
    CHECK(normalize_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(normalize_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(normalize_angle(7.0) == doctest::Approx(7.0 - 2 * std::numbers::pi));
  }

  TEST_CASE("isometry words apply primitives in order") {
    const NilPoint p{0.4, -0.7, 1.1};
    const NilIsometry g = NilIsometry::translation({1, 2, 3})
                              .then(NilIsometry::rotation(0.8))
                              .then(NilIsometry::line_reflection_y());
    CHECK(g.steps().size() == 3);
    CHECK(max_abs_diff(g(p), line_reflect_y(rotate_z(translate(p, {1, 2, 3}), 0.8))) <= 1e-15);
    CHECK(NilIsometry{}(p) == p);
  }

  TEST_CASE("is_finite") {
    CHECK(is_finite(NilPoint{1, 2, 3}));
    CHECK_FALSE(is_finite(NilPoint{1, NAN, 3}));
    CHECK_FALSE(is_finite(Translation{INFINITY, 0, 0}));
  }
}

TEST_SUITE("nil-core properties") {
  TEST_CASE("group laws on 1000 random triples") {
    oracle::Gen gen(101);
    for (int i = 0; i < 1000; ++i) {
      const Translation a = gen.translation(10), b = gen.translation(10), c = gen.translation(10);
      CHECK(max_abs_diff(compose(compose(a, b), c), compose(a, compose(b, c))) <= 1e-12);
      CHECK(max_abs_diff(compose(a, inverse(a)), Translation{}) <= 1e-12);
      CHECK(max_abs_diff(compose(inverse(a), a), Translation{}) <= 1e-12);
      const NilPoint p = gen.point(10);
      CHECK(max_abs_diff(translate(translate(p, a), b), translate(p, compose(a, b))) <= 1e-12);
    }
  }

  TEST_CASE("commutator is central") {
    oracle::Gen gen(102);
    for (int i = 0; i < 500; ++i) {
      const Translation z = commutator(gen.translation(5), gen.translation(5));
      const Translation t = gen.translation(5);
      CHECK(max_abs_diff(compose(z, t), compose(t, z)) <= 1e-12);
    }
  }

  TEST_CASE("rotate_z is M-conjugate to the linear rotation") {
    oracle::Gen gen(103);
    for (int i = 0; i < 500; ++i) {
      const NilPoint p = gen.point(5);
      const double w = gen.uniform(-4, 4);
      CHECK(max_abs_diff(rotate_z(p, w), m_inverse(linear_rotation(m_map(p), w))) <= 1e-12);
    }
  }

  TEST_CASE("rotations are group automorphisms") {
    oracle::Gen gen(104);
    for (int i = 0; i < 300; ++i) {
      const NilPoint p = gen.point(3);
      const Translation t = gen.translation(3);
      const double w = gen.uniform(-3, 3);
      const NilPoint lhs = rotate_z(translate(p, t), w);
      const NilPoint rhs = translate(rotate_z(p, w), translation_to(rotate_z({t.t1, t.t2, t.t3}, w)));
      CHECK(max_abs_diff(lhs, rhs) <= 1e-11);
    }
  }
}
