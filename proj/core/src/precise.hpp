#ifndef GEOBRACKET_SRC_PRECISE_HPP
#define GEOBRACKET_SRC_PRECISE_HPP

// Extended precision plane geometry for the places where double endpoints are
// not enough: crossings deep in the window and zigzag vertices sit within
// 1e-9 of the real axis.

#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "geobracket/error.hpp"
#include "geobracket/hyperbolic.hpp"
#include "geobracket/surface.hpp"

namespace geobracket::precise {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Pt {
  Real x, y;
};

inline PlanePoint to_plane(const Pt& p) { return PlanePoint(p.x.convert_to<double>(), p.y.convert_to<double>()); }

inline Real modulus(const Pt& p) { return sqrt(p.x * p.x + p.y * p.y); }

inline Real asinh_of(const Real& v) { return log(v + sqrt(v * v + 1)); }

inline Real acosh_of(const Real& v) { return log(v + sqrt(v * v - 1)); }

/// Möbius map with real entries; determinant positive but not normalised.
struct Mat {
  Real a, b, c, d;

  static Mat of(const Isometry& m) { return {m.a(), m.b(), m.c(), m.d()}; }
  Mat operator*(const Mat& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
  }
  Mat inverse() const { return {d, -b, -c, a}; }

  Pt apply(const Pt& p) const {
    Real nr = a * p.x + b, ni = a * p.y;
    Real dr = c * p.x + d, di = c * p.y;
    Real den = dr * dr + di * di;
    return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
  }
  Real apply(const Real& t) const { return (a * t + b) / (c * t + d); }
};

inline Mat word_mat(const SurfaceSpec& s, const Word& w) {
  Mat m{1, 0, 0, 1};
  for (Letter l : w.letters()) {
    Mat g = Mat::of(s.generators[l.generator()]);
    m = m * (l.sign() > 0 ? g : g.inverse());
  }
  return m;
}

inline Real translation_length(const Mat& m) {
  Real half = abs(m.a + m.d) / (2 * sqrt(m.a * m.d - m.b * m.c));
  return 2 * acosh_of(half);
}

/// Repelling and attracting fixed points. Both must be finite (c != 0).
inline std::pair<Real, Real> fixed_points(const Mat& m) {
  if (m.c == 0) throw Error(ErrorKind::ConsistencyError, "axis through infinity");
  Real tr = m.a + m.d;
  Real root = sqrt(tr * tr - 4 * (m.a * m.d - m.b * m.c));
  Real z1 = (m.a - m.d + root) / (2 * m.c);
  Real z2 = (m.a - m.d - root) / (2 * m.c);
  // Attracting where the derivative det / (c z + d)^2 is below one.
  Real det = m.a * m.d - m.b * m.c;
  Real k1 = m.c * z1 + m.d;
  if (k1 * k1 > det) return {z2, z1};
  return {z1, z2};
}

/// Orientation preserving map sending p to 0 and q to infinity.
inline Mat normalizer_of(const Real& p, const Real& q) { return q > p ? Mat{1, -p, -1, q} : Mat{-1, p, -1, q}; }

inline Real distance(const Pt& p, const Pt& q) {
  Real dx = p.x - q.x, dy = p.y - q.y;
  return 2 * asinh_of(sqrt(dx * dx + dy * dy) / (2 * sqrt(p.y * q.y)));
}

/// Distance from p to the line with the given endpoints.
inline Real distance_to_line(const Pt& p, const Real& from, const Real& to) {
  Pt w = normalizer_of(from, to).apply(p);
  return asinh_of(abs(w.x) / w.y);
}

/// Crossing of the lines p -> q and u -> v, if they cross.
inline bool crossing_of(const Real& p, const Real& q, const Real& u, const Real& v, Pt& out) {
  Mat n = normalizer_of(p, q);
  Real prod = -n.apply(u) * n.apply(v);
  if (!(prod > 0)) return false;
  out = n.inverse().apply(Pt{0, sqrt(prod)});
  return true;
}

/// Point at signed arclength s from p along the line from -> to (p on it).
inline Pt along(const Real& from, const Real& to, const Pt& p, const Real& s) {
  Mat n = normalizer_of(from, to);
  Pt w = n.apply(p);
  Real f = exp(s);
  return n.inverse().apply(Pt{w.x * f, w.y * f});
}

}  // namespace geobracket::precise

#endif  // GEOBRACKET_SRC_PRECISE_HPP
