#ifndef GEOBRACKET_HYPERBOLIC_HPP
#define GEOBRACKET_HYPERBOLIC_HPP

#include <complex>
#include <optional>
#include <string>

namespace geobracket {

namespace tol {
/// Two geometric objects closer than this (hyperbolic distance, angle) coincide.
inline constexpr double kCoincidence = 1e-9;
/// Trace window around 2 that is classified as parabolic or identity.
inline constexpr double kParabolicTrace = 1e-10;
/// Default residual bound for the numeric identities checked in tests.
inline constexpr double kAssert = 1e-8;
}  // namespace tol

/// Interior point of the upper half-plane.
class PlanePoint {
 public:
  PlanePoint(double x, double y);
  explicit PlanePoint(std::complex<double> z) : PlanePoint(z.real(), z.imag()) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  std::complex<double> z() const noexcept { return {x_, y_}; }

 private:
  double x_;
  double y_;
};

/// Point of the real line or the point at infinity.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double value);
  static BoundaryPoint infinity() noexcept { return BoundaryPoint(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite coordinate; meaningless for the point at infinity.
  double value() const noexcept { return value_; }

  bool operator==(const BoundaryPoint& other) const noexcept {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }

 private:
  BoundaryPoint() noexcept : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

/// Complete geodesic directed from `from` to `to`.
class DirectedGeodesic {
 public:
  DirectedGeodesic(BoundaryPoint from, BoundaryPoint to);

  const BoundaryPoint& from() const noexcept { return from_; }
  const BoundaryPoint& to() const noexcept { return to_; }
  DirectedGeodesic reversed() const { return {to_, from_}; }

 private:
  BoundaryPoint from_;
  BoundaryPoint to_;
};

/// Orientation preserving isometry z -> (az + b) / (cz + d), stored with
/// determinant one. M and -M are the same isometry.
class Isometry {
 public:
  /// Rescales by 1/sqrt(det); throws std::invalid_argument unless det > 0.
  Isometry(double a, double b, double c, double d);

  static Isometry identity() noexcept;

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double trace() const noexcept { return a_ + d_; }
  double det() const noexcept { return a_ * d_ - b_ * c_; }

  Isometry inverse() const noexcept;
  PlanePoint apply(const PlanePoint& p) const;
  BoundaryPoint apply(const BoundaryPoint& p) const;
  DirectedGeodesic apply(const DirectedGeodesic& g) const;

  /// Entrywise comparison up to sign, relative to the largest entry.
  bool projectively_equal(const Isometry& other, double tolerance) const noexcept;

  friend Isometry operator*(const Isometry& lhs, const Isometry& rhs) noexcept;

 private:
  struct Raw {};
  Isometry(Raw, double a, double b, double c, double d) noexcept : a_(a), b_(b), c_(c), d_(d) {}

  double a_, b_, c_, d_;
};

/// Orientation reversing isometry z -> (a conj(z) + b) / (c conj(z) + d) with
/// determinant -1.
class Reflection {
 public:
  Reflection(double a, double b, double c, double d);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  PlanePoint apply(const PlanePoint& p) const;
  BoundaryPoint apply(const BoundaryPoint& p) const;

 private:
  double a_, b_, c_, d_;
};

enum class IsometryType { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(IsometryType type);

IsometryType classify(const Isometry& m) noexcept;

/// 2 arccosh(|tr|/2). Throws NotHyperbolic.
double translation_length(const Isometry& m);

/// Directed from the repelling to the attracting fixed point. Throws NotHyperbolic.
DirectedGeodesic axis(const Isometry& m);

double dist(const PlanePoint& p, const PlanePoint& q) noexcept;

/// True iff the endpoint pairs alternate on the circle at infinity. Only the
/// circular order of the four boundary points is consulted.
bool linked(const DirectedGeodesic& g1, const DirectedGeodesic& g2) noexcept;

/// Same unoriented line.
bool same_line(const DirectedGeodesic& g1, const DirectedGeodesic& g2) noexcept;

/// Crossing point of two lines, if any. Throws CoincidentLines.
std::optional<PlanePoint> intersect(const DirectedGeodesic& g1, const DirectedGeodesic& g2);

/// Isometry taking g onto the imaginary axis, directed from 0 to infinity.
Isometry normalizer(const DirectedGeodesic& g);

/// Hyperbolic distance from a point to a complete geodesic.
double distance_to_line(const PlanePoint& p, const DirectedGeodesic& g);

/// distance_to_line within kCoincidence, widened by the rounding error of
/// points close to the real axis.
bool lies_on(const DirectedGeodesic& g, const PlanePoint& p);
/// Signed arclength along g from the foot of the perpendicular dropped from i
/// to the projection of p. Increases in the direction of g.
double line_parameter(const DirectedGeodesic& g, const PlanePoint& p);

/// Point at signed arclength s from p along g. Throws PointNotOnLine.
PlanePoint point_along(const DirectedGeodesic& g, const PlanePoint& p, double s);

/// Point of g at parameter s, in the convention of line_parameter.
PlanePoint point_at_parameter(const DirectedGeodesic& g, double s);

/// The geodesic through two distinct points, directed from p towards q.
DirectedGeodesic geodesic_through(const PlanePoint& p, const PlanePoint& q);

/// Euclidean unit tangent of g at p in the forward direction.
std::complex<double> forward_tangent(const DirectedGeodesic& g, const PlanePoint& p);

/// Angle in (0, pi) between the forward directions of g1 and g2 at p.
/// Throws PointNotOnLine.
double forward_angle(const DirectedGeodesic& g1, const DirectedGeodesic& g2, const PlanePoint& p);

/// Sign of det(tangent g1, tangent g2) at p in the standard orientation.
/// Throws PointNotOnLine or TangentDegenerate.
int crossing_sign(const DirectedGeodesic& g1, const DirectedGeodesic& g2, const PlanePoint& p);

PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q);

/// Half turn about u.
Isometry rotation_pi(const PlanePoint& u);

/// x == R_p R_s projectively. Throws PointNotOnAxis when p is not on axis(x).
bool compose_rotations_check(const Isometry& x, const PlanePoint& p, const PlanePoint& s);

/// Translation length of a product of two hyperbolics whose axes cross at
/// angle alpha:
///   cosh(l/2) = cosh(lx/2) cosh(ly/2) - sinh(lx/2) sinh(ly/2) cos(alpha).
/// Throws DegenerateProduct when the right hand side is not above one.
///
/// With the forward angle theta between the two axes, alpha = pi - theta
/// reproduces translation_length(X * Y); see forward_alpha().
double beardon_length(double lx, double ly, double alpha);

/// The angle to feed beardon_length for two axes crossing at forward angle theta.
inline double forward_alpha(double theta) noexcept { return 3.14159265358979323846 - theta; }

Reflection reflection_about(const DirectedGeodesic& g);
PlanePoint apply_reflection(const Reflection& r, const PlanePoint& p);

/// Perpendicular to g at p, directed to the right of g. Throws PointNotOnLine.
DirectedGeodesic perpendicular_at(const DirectedGeodesic& g, const PlanePoint& p);

std::string to_string(const BoundaryPoint& p);
std::string to_string(const DirectedGeodesic& g);

}  // namespace geobracket

#endif  // GEOBRACKET_HYPERBOLIC_HPP
