#include "geobracket/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "geobracket/error.hpp"

namespace geobracket {

namespace {

using cplx = std::complex<double>;

cplx apply_raw(const Isometry& m, cplx z) { return (m.a() * z + m.b()) / (m.c() * z + m.d()); }

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_on_line(const DirectedGeodesic& g, const PlanePoint& p, ErrorKind kind) {
  if (!lies_on(g, p)) {
    std::ostringstream os;
    os << "point (" << p.x() << ", " << p.y() << ") is " << distance_to_line(p, g) << " away from " << to_string(g);
    throw Error(kind, os.str());
  }
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::CoincidentLines: return "CoincidentLines";
    case ErrorKind::PointNotOnLine: return "PointNotOnLine";
    case ErrorKind::PointNotOnAxis: return "PointNotOnAxis";
    case ErrorKind::DegenerateProduct: return "DegenerateProduct";
    case ErrorKind::IdentityClass: return "IdentityClass";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::OddCount: return "OddCount";
    case ErrorKind::TangentDegenerate: return "TangentDegenerate";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
    case ErrorKind::UnknownSurface: return "UnknownSurface";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConsistencyError: return "ConsistencyError";
    case ErrorKind::VertexMismatch: return "VertexMismatch";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Value types

PlanePoint::PlanePoint(double x, double y) : x_(x), y_(y) {
  if (!(y > 1e-300) || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("PlanePoint must lie strictly inside the upper half-plane");
  }
}

BoundaryPoint::BoundaryPoint(double value) : value_(value), infinite_(false) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("finite BoundaryPoint needs a finite coordinate");
  }
}

DirectedGeodesic::DirectedGeodesic(BoundaryPoint from, BoundaryPoint to) : from_(from), to_(to) {
  if (from_ == to_) {
    throw std::invalid_argument("geodesic endpoints must differ");
  }
}

Isometry::Isometry(double a, double b, double c, double d) {
  double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw std::invalid_argument("Isometry needs a positive determinant");
  }
  double s = 1.0 / std::sqrt(det);
  a_ = a * s;
  b_ = b * s;
  c_ = c * s;
  d_ = d * s;
}

Isometry Isometry::identity() noexcept { return Isometry(Raw{}, 1.0, 0.0, 0.0, 1.0); }

Isometry Isometry::inverse() const noexcept { return Isometry(Raw{}, d_, -b_, -c_, a_); }

Isometry operator*(const Isometry& l, const Isometry& r) noexcept {
  double a = l.a_ * r.a_ + l.b_ * r.c_;
  double b = l.a_ * r.b_ + l.b_ * r.d_;
  double c = l.c_ * r.a_ + l.d_ * r.c_;
  double d = l.c_ * r.b_ + l.d_ * r.d_;
  // The determinant is 1 up to rounding; recomputing it from large entries
  // cancels catastrophically, so the product is not rescaled.
  return Isometry(Isometry::Raw{}, a, b, c, d);
}

PlanePoint Isometry::apply(const PlanePoint& p) const { return PlanePoint(apply_raw(*this, p.z())); }

BoundaryPoint Isometry::apply(const BoundaryPoint& p) const {
  if (p.is_infinite()) {
    return c_ == 0.0 ? BoundaryPoint::infinity() : BoundaryPoint(a_ / c_);
  }
  double denom = c_ * p.value() + d_;
  if (denom == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint((a_ * p.value() + b_) / denom);
}

DirectedGeodesic Isometry::apply(const DirectedGeodesic& g) const {
  return DirectedGeodesic(apply(g.from()), apply(g.to()));
}

bool Isometry::projectively_equal(const Isometry& o, double tolerance) const noexcept {
  double scale = std::max({1.0, std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
  double same = std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_),
                          std::abs(d_ - o.d_)});
  double flipped = std::max({std::abs(a_ + o.a_), std::abs(b_ + o.b_), std::abs(c_ + o.c_),
                             std::abs(d_ + o.d_)});
  return std::min(same, flipped) <= tolerance * scale;
}

Reflection::Reflection(double a, double b, double c, double d) {
  double det = a * d - b * c;
  if (!(det < 0.0) || !std::isfinite(det)) {
    throw std::invalid_argument("Reflection needs a negative determinant");
  }
  double s = 1.0 / std::sqrt(-det);
  a_ = a * s;
  b_ = b * s;
  c_ = c * s;
  d_ = d * s;
}

PlanePoint Reflection::apply(const PlanePoint& p) const {
  cplx z = std::conj(p.z());
  return PlanePoint((a_ * z + b_) / (c_ * z + d_));
}

BoundaryPoint Reflection::apply(const BoundaryPoint& p) const {
  if (p.is_infinite()) {
    return c_ == 0.0 ? BoundaryPoint::infinity() : BoundaryPoint(a_ / c_);
  }
  double denom = c_ * p.value() + d_;
  if (denom == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint((a_ * p.value() + b_) / denom);
}

// ---------------------------------------------------------------------------
// Isometry classification

std::string to_string(IsometryType type) {
  switch (type) {
    case IsometryType::Identity: return "identity";
    case IsometryType::Elliptic: return "elliptic";
    case IsometryType::Parabolic: return "parabolic";
    case IsometryType::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

IsometryType classify(const Isometry& m) noexcept {
  double t = std::abs(m.trace());
  if (std::abs(t - 2.0) <= tol::kParabolicTrace) {
    double off = std::max({std::abs(m.b()), std::abs(m.c()), std::abs(m.a() - m.d())});
    return off <= tol::kParabolicTrace ? IsometryType::Identity : IsometryType::Parabolic;
  }
  return t < 2.0 ? IsometryType::Elliptic : IsometryType::Hyperbolic;
}

double translation_length(const Isometry& m) {
  double t = std::abs(m.trace());
  if (t <= 2.0 + tol::kParabolicTrace) {
    throw Error(ErrorKind::NotHyperbolic, "|trace| = " + std::to_string(t));
  }
  return 2.0 * std::acosh(t / 2.0);
}

DirectedGeodesic axis(const Isometry& m) {
  if (classify(m) != IsometryType::Hyperbolic) {
    throw Error(ErrorKind::NotHyperbolic, "axis of a " + to_string(classify(m)) + " isometry");
  }
  double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  if (c == 0.0) {
    BoundaryPoint finite(b / (d - a));
    // z -> (a/d) z + b/d expands towards infinity when |a| > |d|.
    if (std::abs(a) > std::abs(d)) return DirectedGeodesic(finite, BoundaryPoint::infinity());
    return DirectedGeodesic(BoundaryPoint::infinity(), finite);
  }
  // Fixed points solve c z^2 + (d - a) z - b = 0.
  double t = std::abs(a + d);
  double disc = (t - 2.0) * (t + 2.0);
  double beta = d - a;
  double q = -0.5 * (beta + sign_of(beta) * std::sqrt(disc));
  double r1 = q / c;
  double r2 = -b / q;
  // Multiplier at a fixed point z is 1 / (cz + d)^2.
  bool r1_attracting = std::abs(c * r1 + d) > 1.0;
  BoundaryPoint p1(r1), p2(r2);
  return r1_attracting ? DirectedGeodesic(p2, p1) : DirectedGeodesic(p1, p2);
}

// ---------------------------------------------------------------------------
// Metric and lines

double dist(const PlanePoint& p, const PlanePoint& q) noexcept {
  double chord = std::abs(p.z() - q.z());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y() * q.y())));
}

bool linked(const DirectedGeodesic& g1, const DirectedGeodesic& g2) noexcept {
  const BoundaryPoint& a1 = g1.from();
  const BoundaryPoint& a2 = g1.to();
  const BoundaryPoint& b1 = g2.from();
  const BoundaryPoint& b2 = g2.to();
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;

  auto split_by = [](const BoundaryPoint& p1, const BoundaryPoint& p2, const BoundaryPoint& q1,
                     const BoundaryPoint& q2) {
    // p1/p2 cut the circle into two arcs; report whether q1, q2 lie on different arcs.
    if (p1.is_infinite() || p2.is_infinite()) {
      double cut = p1.is_infinite() ? p2.value() : p1.value();
      return (q1.value() > cut) != (q2.value() > cut);
    }
    double lo = std::min(p1.value(), p2.value());
    double hi = std::max(p1.value(), p2.value());
    auto inside = [&](const BoundaryPoint& q) {
      return !q.is_infinite() && lo < q.value() && q.value() < hi;
    };
    return inside(q1) != inside(q2);
  };
  if (b1.is_infinite() || b2.is_infinite()) return split_by(b1, b2, a1, a2);
  return split_by(a1, a2, b1, b2);
}

bool same_line(const DirectedGeodesic& g1, const DirectedGeodesic& g2) noexcept {
  auto close = [](const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.is_infinite() || q.is_infinite()) return p.is_infinite() && q.is_infinite();
    return std::abs(p.value() - q.value()) <=
           tol::kCoincidence * std::max({1.0, std::abs(p.value()), std::abs(q.value())});
  };
  return (close(g1.from(), g2.from()) && close(g1.to(), g2.to())) ||
         (close(g1.from(), g2.to()) && close(g1.to(), g2.from()));
}

Isometry normalizer(const DirectedGeodesic& g) {
  const BoundaryPoint& p = g.from();
  const BoundaryPoint& q = g.to();
  if (q.is_infinite()) return Isometry(1.0, -p.value(), 0.0, 1.0);
  if (p.is_infinite()) return Isometry(0.0, -1.0, 1.0, -q.value());
  double pv = p.value(), qv = q.value();
  if (pv > qv) return Isometry(1.0, -pv, 1.0, -qv);
  return Isometry(-1.0, pv, 1.0, -qv);
}

std::optional<PlanePoint> intersect(const DirectedGeodesic& g1, const DirectedGeodesic& g2) {
  if (same_line(g1, g2)) {
    throw Error(ErrorKind::CoincidentLines, to_string(g1) + " and " + to_string(g2));
  }
  if (!linked(g1, g2)) return std::nullopt;
  Isometry n = normalizer(g1);
  BoundaryPoint u = n.apply(g2.from());
  BoundaryPoint v = n.apply(g2.to());
  if (u.is_infinite() || v.is_infinite()) return std::nullopt;
  double prod = -u.value() * v.value();
  if (!(prod > 0.0)) return std::nullopt;
  return n.inverse().apply(PlanePoint(0.0, std::sqrt(prod)));
}

bool lies_on(const DirectedGeodesic& g, const PlanePoint& p) {
  // Points are known to a few ulps of their Euclidean coordinates, which is a
  // large hyperbolic error close to the real axis.
  double scale = std::max({1.0, std::abs(p.x()), g.from().is_infinite() ? 0.0 : std::abs(g.from().value()),
                           g.to().is_infinite() ? 0.0 : std::abs(g.to().value())});
  double slack = 1024.0 * std::numeric_limits<double>::epsilon() * scale / p.y();
  return distance_to_line(p, g) <= tol::kCoincidence + slack;
}

double distance_to_line(const PlanePoint& p, const DirectedGeodesic& g) {
  cplx w = apply_raw(normalizer(g), p.z());
  return std::asinh(std::abs(w.real()) / w.imag());
}

double line_parameter(const DirectedGeodesic& g, const PlanePoint& p) {
  Isometry n = normalizer(g);
  cplx w = apply_raw(n, p.z());
  cplx o = apply_raw(n, cplx(0.0, 1.0));
  return std::log(std::abs(w)) - std::log(std::abs(o));
}

PlanePoint point_along(const DirectedGeodesic& g, const PlanePoint& p, double s) {
  require_on_line(g, p, ErrorKind::PointNotOnLine);
  Isometry n = normalizer(g);
  double h = std::abs(apply_raw(n, p.z()));
  return n.inverse().apply(PlanePoint(0.0, h * std::exp(s)));
}

PlanePoint point_at_parameter(const DirectedGeodesic& g, double s) {
  Isometry n = normalizer(g);
  double h = std::abs(apply_raw(n, cplx(0.0, 1.0)));
  return n.inverse().apply(PlanePoint(0.0, h * std::exp(s)));
}

DirectedGeodesic geodesic_through(const PlanePoint& p, const PlanePoint& q) {
  double dx = q.x() - p.x();
  double scale = std::max({1.0, std::abs(p.x()), std::abs(q.x())});
  if (std::abs(dx) <= 1e-15 * scale) {
    if (q.y() == p.y()) throw std::invalid_argument("geodesic_through needs distinct points");
    BoundaryPoint foot(0.5 * (p.x() + q.x()));
    return q.y() > p.y() ? DirectedGeodesic(foot, BoundaryPoint::infinity())
                         : DirectedGeodesic(BoundaryPoint::infinity(), foot);
  }
  double pn = std::norm(p.z());
  double qn = std::norm(q.z());
  double c = (pn - qn) / (2.0 * (p.x() - q.x()));
  double r = std::hypot(p.x() - c, p.y());
  // Endpoints c -+ r; the far one is computed directly, the near one from the
  // product c^2 - r^2 = 2 c x_p - |p|^2 to avoid cancellation.
  double far = c + sign_of(c) * r;
  double near = (2.0 * c * p.x() - pn) / far;
  double lo = std::min(far, near);
  double hi = std::max(far, near);
  return dx > 0.0 ? DirectedGeodesic(BoundaryPoint(lo), BoundaryPoint(hi))
                  : DirectedGeodesic(BoundaryPoint(hi), BoundaryPoint(lo));
}

std::complex<double> forward_tangent(const DirectedGeodesic& g, const PlanePoint& p) {
  if (g.to().is_infinite()) return {0.0, 1.0};
  if (g.from().is_infinite()) return {0.0, -1.0};
  double u = g.from().value();
  double v = g.to().value();
  double c = 0.5 * (u + v);
  cplx t(p.y(), c - p.x());
  t *= sign_of(v - u);
  return t / std::abs(t);
}

double forward_angle(const DirectedGeodesic& g1, const DirectedGeodesic& g2, const PlanePoint& p) {
  require_on_line(g1, p, ErrorKind::PointNotOnLine);
  require_on_line(g2, p, ErrorKind::PointNotOnLine);
  cplx t1 = forward_tangent(g1, p);
  cplx t2 = forward_tangent(g2, p);
  double cross = t1.real() * t2.imag() - t1.imag() * t2.real();
  double dot = t1.real() * t2.real() + t1.imag() * t2.imag();
  return std::atan2(std::abs(cross), dot);
}

int crossing_sign(const DirectedGeodesic& g1, const DirectedGeodesic& g2, const PlanePoint& p) {
  double angle = forward_angle(g1, g2, p);
  if (angle < tol::kCoincidence || M_PI - angle < tol::kCoincidence) {
    throw Error(ErrorKind::TangentDegenerate, "forward angle " + std::to_string(angle));
  }
  cplx t1 = forward_tangent(g1, p);
  cplx t2 = forward_tangent(g2, p);
  double cross = t1.real() * t2.imag() - t1.imag() * t2.real();
  return cross > 0.0 ? 1 : -1;
}

PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q) {
  if (p.x() == q.x() && p.y() == q.y()) return p;
  DirectedGeodesic g = geodesic_through(p, q);
  Isometry n = normalizer(g);
  double hp = std::abs(apply_raw(n, p.z()));
  double hq = std::abs(apply_raw(n, q.z()));
  return n.inverse().apply(PlanePoint(0.0, std::sqrt(hp * hq)));
}

Isometry rotation_pi(const PlanePoint& u) {
  double x = u.x(), y = u.y();
  return Isometry(-x / y, (x * x + y * y) / y, -1.0 / y, x / y);
}

bool compose_rotations_check(const Isometry& x, const PlanePoint& p, const PlanePoint& s) {
  require_on_line(axis(x), p, ErrorKind::PointNotOnAxis);
  return (rotation_pi(p) * rotation_pi(s)).projectively_equal(x, tol::kCoincidence);
}

double beardon_length(double lx, double ly, double alpha) {
  double rhs = std::cosh(lx / 2.0) * std::cosh(ly / 2.0) -
               std::sinh(lx / 2.0) * std::sinh(ly / 2.0) * std::cos(alpha);
  if (!(rhs > 1.0 + 1e-12)) {
    throw Error(ErrorKind::DegenerateProduct, "cosh(l/2) = " + std::to_string(rhs));
  }
  return 2.0 * std::acosh(rhs);
}

Reflection reflection_about(const DirectedGeodesic& g) {
  if (g.from().is_infinite() || g.to().is_infinite()) {
    double u = g.from().is_infinite() ? g.to().value() : g.from().value();
    return Reflection(-1.0, 2.0 * u, 0.0, 1.0);
  }
  double u = g.from().value();
  double v = g.to().value();
  double c = 0.5 * (u + v);
  // z -> c + r^2 / (conj z - c), with r^2 - c^2 = -uv.
  return Reflection(c, -u * v, 1.0, -c);
}

PlanePoint apply_reflection(const Reflection& r, const PlanePoint& p) { return r.apply(p); }

DirectedGeodesic perpendicular_at(const DirectedGeodesic& g, const PlanePoint& p) {
  require_on_line(g, p, ErrorKind::PointNotOnLine);
  Isometry n = normalizer(g);
  double h = std::abs(apply_raw(n, p.z()));
  Isometry back = n.inverse();
  return DirectedGeodesic(back.apply(BoundaryPoint(-h)), back.apply(BoundaryPoint(h)));
}

std::string to_string(const BoundaryPoint& p) {
  if (p.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << p.value();
  return os.str();
}

std::string to_string(const DirectedGeodesic& g) {
  return to_string(g.from()) + " -> " + to_string(g.to());
}

}  // namespace geobracket
