#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "geobracket/error.hpp"
#include "geobracket/hyperbolic.hpp"
#include "geobracket/surface.hpp"

namespace geobracket {
namespace {

using std::numbers::e;
using std::numbers::pi;
using testing::Gen;

constexpr double kTol = 1e-10;

Isometry diag(double k) { return Isometry(k, 0, 0, 1 / k); }

DirectedGeodesic line(double from, double to) { return {BoundaryPoint(from), BoundaryPoint(to)}; }
DirectedGeodesic vertical(double foot) { return {BoundaryPoint(foot), BoundaryPoint::infinity()}; }

void expect_near(const PlanePoint& p, const PlanePoint& q, double tol = kTol) {
  EXPECT_NEAR(p.x(), q.x(), tol);
  EXPECT_NEAR(p.y(), q.y(), tol);
}

TEST(Classify, SampleMatrices) {
  EXPECT_EQ(classify(diag(e)), IsometryType::Hyperbolic);
  EXPECT_EQ(classify(Isometry(0, 1, -1, 0)), IsometryType::Elliptic);
  EXPECT_EQ(classify(Isometry(1, 1, 0, 1)), IsometryType::Parabolic);
  EXPECT_EQ(classify(Isometry::identity()), IsometryType::Identity);
}

TEST(Isometry, RescalesToUnitDeterminant) {
  Isometry m(2, 0, 0, 8);
  EXPECT_NEAR(m.det(), 1.0, 1e-15);
  EXPECT_THROW(Isometry(0, 1, 1, 0), std::invalid_argument);
}

TEST(Isometry, ProjectiveEquality) {
  Isometry m(1, 2, 3, 7);
  Isometry neg(-1, -2, -3, -7);
  EXPECT_TRUE(m.projectively_equal(neg, 1e-12));
  EXPECT_FALSE(m.projectively_equal(m.inverse(), 1e-6));
}

TEST(TranslationLength, Diagonal) { EXPECT_NEAR(translation_length(diag(e)), 2.0, kTol); }

TEST(TranslationLength, HyperbolicRotation) {
  EXPECT_NEAR(translation_length(Isometry(std::cosh(1), std::sinh(1), std::sinh(1), std::cosh(1))), 2.0, kTol);
}

TEST(TranslationLength, RejectsNonHyperbolic) {
  EXPECT_THROW(translation_length(Isometry(0, 1, -1, 0)), Error);
}

TEST(TranslationLength, HoledTorusGeneratorProduct) {
  // Entries of the shipped generators; the trace of the product by hand.
  const double a[4] = {2.2642622678586051, 4.8637953918627312, 1.9224487714872456, 4.5712007936432997};
  const double b[4] = {6.021805974256722, 4.7144568565351346, 2.1826189150625619, 1.874830035637854};
  double trace = a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3];
  double expected = 2 * std::acosh(std::abs(trace) / 2);

  SurfaceSpec s = builtin("holed-torus");
  Isometry x = s.generators[0], y = s.generators[1];
  EXPECT_NEAR(translation_length(x * y), expected, 1e-9);
  PlanePoint p = *intersect(axis(x), axis(y));
  double theta = forward_angle(axis(x), axis(y), p);
  EXPECT_NEAR(beardon_length(translation_length(x), translation_length(y), forward_alpha(theta)), expected, 1e-9);
}

TEST(Axis, DiagonalAndInverse) {
  DirectedGeodesic up = axis(diag(e));
  EXPECT_EQ(up.from(), BoundaryPoint(0.0));
  EXPECT_TRUE(up.to().is_infinite());
  DirectedGeodesic down = axis(diag(1 / e));
  EXPECT_TRUE(down.from().is_infinite());
  EXPECT_EQ(down.to(), BoundaryPoint(0.0));
}

TEST(Axis, EquivariantUnderConjugation) {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    Isometry m = gen.hyperbolic(), g = gen.isometry();
    DirectedGeodesic lhs = axis(g * m * g.inverse());
    DirectedGeodesic rhs = g.apply(axis(m));
    ASSERT_FALSE(lhs.from().is_infinite() || rhs.from().is_infinite() || lhs.to().is_infinite() ||
                 rhs.to().is_infinite());
    double scale = 1 + std::abs(rhs.from().value()) + std::abs(rhs.to().value());
    EXPECT_NEAR(lhs.from().value(), rhs.from().value(), 1e-7 * scale * scale);
    EXPECT_NEAR(lhs.to().value(), rhs.to().value(), 1e-7 * scale * scale);
  }
}

TEST(Distance, VerticalRay) {
  EXPECT_NEAR(dist(PlanePoint(0, 1), PlanePoint(0, e)), 1.0, kTol);
  PlanePoint p(0.3, 0.7);
  EXPECT_NEAR(dist(p, p), 0.0, kTol);
}

TEST(Distance, InvariantUnderIsometries) {
  Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    PlanePoint p = gen.point(), q = gen.point();
    Isometry g = gen.isometry();
    EXPECT_NEAR(dist(g.apply(p), g.apply(q)), dist(p, q), 1e-8 * (1 + dist(p, q)));
  }
}

TEST(Distance, TriangleInequality) {
  Gen gen(13);
  for (int i = 0; i < 500; ++i) {
    PlanePoint p = gen.point(), q = gen.point(), r = gen.point();
    EXPECT_LE(dist(p, r), dist(p, q) + dist(q, r) + 1e-9);
  }
}

TEST(Intersect, Examples) {
  expect_near(*intersect(vertical(0), line(-1, 1)), PlanePoint(0, 1));
  EXPECT_FALSE(intersect(vertical(0), line(1, 2)).has_value());
  expect_near(*intersect(line(-1, 1), vertical(0)), PlanePoint(0, 1));
  EXPECT_THROW(intersect(line(-1, 1), line(1, -1)), Error);
}

TEST(Intersect, AgreesWithLinking) {
  Gen gen(14);
  for (int i = 0; i < 500; ++i) {
    DirectedGeodesic g1 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    DirectedGeodesic g2 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    auto p = intersect(g1, g2);
    EXPECT_EQ(p.has_value(), linked(g1, g2));
    if (p) {
      EXPECT_LT(distance_to_line(*p, g1), 1e-8);
      EXPECT_LT(distance_to_line(*p, g2), 1e-8);
    }
  }
}

TEST(Linked, InvariantUnderIsometries) {
  Gen gen(15);
  for (int i = 0; i < 500; ++i) {
    DirectedGeodesic g1 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    DirectedGeodesic g2 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    Isometry m = gen.isometry();
    EXPECT_EQ(linked(m.apply(g1), m.apply(g2)), linked(g1, g2));
  }
}

TEST(ForwardAngle, Examples) {
  PlanePoint i(0, 1);
  EXPECT_NEAR(forward_angle(vertical(0), line(-1, 1), i), pi / 2, kTol);
  DirectedGeodesic g1 = line(-2, 3), g2 = line(0.5, -4);
  PlanePoint p = *intersect(g1, g2);
  double theta = forward_angle(g1, g2, p);
  EXPECT_NEAR(forward_angle(g2, g1, p), theta, kTol);
  EXPECT_NEAR(forward_angle(g1, g2.reversed(), p), pi - theta, kTol);
  EXPECT_THROW(forward_angle(g1, g2, PlanePoint(10, 10)), Error);
}

TEST(CrossingSign, StandardOrientation) {
  PlanePoint i(0, 1);
  EXPECT_EQ(crossing_sign(line(-1, 1), vertical(0), i), 1);
  EXPECT_EQ(crossing_sign(vertical(0), line(-1, 1), i), -1);
  EXPECT_EQ(crossing_sign(line(-1, 1), DirectedGeodesic(BoundaryPoint::infinity(), BoundaryPoint(0)), i), -1);
}

TEST(CrossingSign, PreservedByIsometries) {
  Gen gen(16);
  int checked = 0;
  while (checked < 300) {
    DirectedGeodesic g1 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    DirectedGeodesic g2 = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    auto p = intersect(g1, g2);
    if (!p) continue;
    Isometry m = gen.isometry();
    EXPECT_EQ(crossing_sign(m.apply(g1), m.apply(g2), m.apply(*p)), crossing_sign(g1, g2, *p));
    ++checked;
  }
}

TEST(Midpoint, Examples) {
  expect_near(midpoint(PlanePoint(0, 1), PlanePoint(0, e * e)), PlanePoint(0, e));
  PlanePoint p(0.4, 2.0);
  expect_near(midpoint(p, p), p);
}

TEST(Midpoint, Equivariant) {
  Gen gen(17);
  for (int i = 0; i < 300; ++i) {
    PlanePoint p = gen.point(), q = gen.point();
    Isometry g = gen.isometry();
    PlanePoint lhs = midpoint(g.apply(p), g.apply(q));
    PlanePoint rhs = g.apply(midpoint(p, q));
    EXPECT_LT(dist(lhs, rhs), 1e-8);
    EXPECT_NEAR(dist(p, midpoint(p, q)), dist(p, q) / 2, 1e-8);
  }
}

TEST(RotationPi, AtI) {
  EXPECT_TRUE(rotation_pi(PlanePoint(0, 1)).projectively_equal(Isometry(0, 1, -1, 0), 1e-12));
}

TEST(RotationPi, InvolutionFixingOnlyCenter) {
  Gen gen(18);
  for (int i = 0; i < 200; ++i) {
    PlanePoint u = gen.point();
    Isometry r = rotation_pi(u);
    EXPECT_TRUE((r * r).projectively_equal(Isometry::identity(), 1e-9));
    EXPECT_LT(dist(r.apply(u), u), 1e-8);
    PlanePoint v = gen.point();
    if (dist(u, v) > 1e-3) {
      EXPECT_NEAR(dist(r.apply(v), v), 2 * dist(u, v), 1e-7 * (1 + dist(u, v)));
    }
  }
}

TEST(ComposeRotations, DiagonalExample) {
  Isometry x = diag(e);
  double t = 0.3;
  PlanePoint p(0, std::exp(t));
  EXPECT_TRUE(compose_rotations_check(x, p, PlanePoint(0, std::exp(t - 1))));
  EXPECT_FALSE(compose_rotations_check(x, p, PlanePoint(0, std::exp(t - 0.7))));
  Isometry g(2, 1, 1, 3);
  EXPECT_TRUE(compose_rotations_check(g * x * g.inverse(), g.apply(p), g.apply(PlanePoint(0, std::exp(t - 1)))));
  EXPECT_THROW(compose_rotations_check(x, PlanePoint(1, 1), PlanePoint(0, 1)), Error);
}

TEST(BeardonLength, RightAngleValue) {
  double expected = 2 * std::acosh(std::cosh(1.0) * std::cosh(1.0));
  EXPECT_NEAR(beardon_length(2, 2, pi / 2), expected, 1e-12);
  EXPECT_NEAR(beardon_length(2, 2, pi / 2), 3.026748, 1e-6);
}

TEST(BeardonLength, StraightAngleAddsLengths) {
  EXPECT_NEAR(beardon_length(1.3, 2.2, pi), 3.5, 1e-9);
  EXPECT_NEAR(beardon_length(1.3, 2.2, pi - 1e-6), 3.5, 1e-6);
}

TEST(BeardonLength, MatchesProductTrace) {
  Gen gen(19);
  int checked = 0;
  while (checked < 500) {
    Isometry x = gen.hyperbolic(), y = gen.hyperbolic();
    auto p = intersect(axis(x), axis(y));
    if (!p) continue;
    double theta = forward_angle(axis(x), axis(y), *p);
    double l = beardon_length(translation_length(x), translation_length(y), forward_alpha(theta));
    EXPECT_NEAR(translation_length(x * y), l, 1e-8 * (1 + l));
    EXPECT_NEAR(translation_length(y * x), l, 1e-8 * (1 + l));
    ++checked;
  }
}

TEST(Reflection, AboutImaginaryAxis) {
  Reflection r = reflection_about(vertical(0));
  expect_near(apply_reflection(r, PlanePoint(0.7, 1.9)), PlanePoint(-0.7, 1.9));
}

TEST(Reflection, Involution) {
  Gen gen(20);
  for (int i = 0; i < 200; ++i) {
    DirectedGeodesic g = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    Reflection r = reflection_about(g);
    PlanePoint p = gen.point();
    EXPECT_LT(dist(apply_reflection(r, apply_reflection(r, p)), p), 1e-8);
    EXPECT_NEAR(distance_to_line(apply_reflection(r, p), g), distance_to_line(p, g), 1e-8);
  }
}

TEST(Perpendicular, AtI) {
  DirectedGeodesic g = perpendicular_at(vertical(0), PlanePoint(0, 1));
  EXPECT_TRUE(same_line(g, line(-1, 1)));
}

TEST(LineParameter, RoundTrip) {
  Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    DirectedGeodesic g = line(gen.uniform(-4, 4), gen.uniform(-4, 4));
    double s = gen.uniform(-3, 3);
    PlanePoint p = point_at_parameter(g, s);
    EXPECT_TRUE(lies_on(g, p));
    EXPECT_NEAR(line_parameter(g, p), s, 1e-8);
    EXPECT_NEAR(line_parameter(g, point_along(g, p, 0.5)), s + 0.5, 1e-8);
  }
}

TEST(PlanePoint, RejectsLowerHalfPlane) { EXPECT_THROW(PlanePoint(0, -1), std::invalid_argument); }

}  // namespace
}  // namespace geobracket
