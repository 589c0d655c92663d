#include "geobracket/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>


#include "geobracket/error.hpp"
#include "precise.hpp"

namespace geobracket {

namespace {


// Position on the unit circle of a boundary point, via z -> 2 atan(z).
double circle_angle(const BoundaryPoint& p) { return p.is_infinite() ? M_PI : 2.0 * std::atan(p.value()); }

bool circle_linked(const DirectedGeodesic& g1, const DirectedGeodesic& g2) {
  double a1 = circle_angle(g1.from()), a2 = circle_angle(g1.to());
  double b1 = circle_angle(g2.from()), b2 = circle_angle(g2.to());
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  double lo = std::min(a1, a2), hi = std::max(a1, a2);
  auto inside = [&](double t) { return lo < t && t < hi; };
  return inside(b1) != inside(b2);
}

// (z - p) / (q - z) with the usual limits at infinity; the map sending the
// axis p -> q onto 0 -> infinity, up to a positive factor.
double axis_coordinate(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& z) {
  if (z.is_infinite()) return -1.0;
  if (p.is_infinite()) return 1.0 / (q.value() - z.value());
  if (q.is_infinite()) return z.value() - p.value();
  return (z.value() - p.value()) / (q.value() - z.value());
}

double origin_norm2(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinite()) return 1.0 / (1.0 + q.value() * q.value());
  if (q.is_infinite()) return 1.0 + p.value() * p.value();
  return (1.0 + p.value() * p.value()) / (1.0 + q.value() * q.value());
}

// exp(2 t) for the crossing of `line` with the axis `base`, t measured as in
// line_parameter. Uses only the four boundary points.
double window_ratio(const DirectedGeodesic& base, const DirectedGeodesic& line) {
  double fu = axis_coordinate(base.from(), base.to(), line.from());
  double fv = axis_coordinate(base.from(), base.to(), line.to());
  return -fu * fv / origin_norm2(base.from(), base.to());
}

std::string describe(const PlanePoint& p) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

}  // namespace

void VerificationReport::absorb(const VerificationReport& other) {
  instances += other.instances;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  residual(other.max_residual);
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  j["max_residual"] = r.max_residual;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  return j;
}

int linking_oracle_count(const Engine& engine, const CyclicWord& x, const CyclicWord& y) {
  auto [root_class, periods] = is_power(x);
  ClosedGeodesic root = engine.geodesic_of(root_class);
  const double upper = std::exp(2.0 * root.length);
  int count = 0;
  for (const Lift& lift : engine.lifts(y.as_word())->lifts) {
    if (!circle_linked(root.ax, lift.ax)) continue;
    if (commute(lift.element, root.rep)) continue;
    double ratio = window_ratio(root.ax, lift.ax);
    if (ratio >= 1.0 && ratio < upper) ++count;
  }
  return count * periods;
}

VerificationReport radius_stability(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y,
                                    int radius) {
  return radius_stability(Engine(s, radius), Engine(s, radius + 2), x, y);
}

VerificationReport radius_stability(const Engine& inner, const Engine& outer, const CyclicWord& x,
                                    const CyclicWord& y) {
  VerificationReport report;
  report.name = "radius_stability";
  report.instances = 1;
  std::size_t n1 = inner.crossings(x, y).size();
  std::size_t n2 = outer.crossings(x, y).size();
  auto terms = [&](const Engine& e) {
    if (x != y) return bracket(e, x, y);
    return is_primitive(x) ? bracket_bar(e, x) : BracketResult{};
  };
  BracketResult b1 = terms(inner);
  BracketResult b2 = terms(outer);
  std::string label = "[" + format(x) + ", " + format(y) + "]";
  std::string radii = " at radius " + std::to_string(inner.radius()) + " vs " + std::to_string(outer.radius());
  if (n1 != n2) {
    report.failures.push_back(label + ": " + std::to_string(n1) + " vs " + std::to_string(n2) + " crossings" + radii);
  }
  if (b1 != b2) {
    report.failures.push_back(label + ": term map " + to_string(b1) + " vs " + to_string(b2) + radii);
  }
  return report;
}

VerificationReport check_forward_angle_congruence(const std::vector<CrossingPair>& pairs,
                                                  const Tolerances& limits) {
  VerificationReport report;
  report.name = "forward_angle_congruence";
  for (const auto& [p, q] : pairs) {
    ++report.instances;
    double r = std::abs(p.angle - q.angle);
    report.residual(r);
    if (r >= limits.angle) {
      std::ostringstream os;
      os.precision(12);
      os << format(loop_product_class(p)) << ": angles " << p.angle << " and " << q.angle;
      report.failures.push_back(os.str());
    }
  }
  return report;
}

VerificationReport check_forward_angle_congruence(const Engine& engine, const CyclicWord& x,
                                                  const CyclicWord& y, const Tolerances& limits) {
  return check_forward_angle_congruence(canceling_pairs(engine, x, y), limits);
}

VerificationReport check_smaller_angle_exists(const Engine& engine, const CyclicWord& x,
                                              const CyclicWord& y, const Tolerances& limits) {
  VerificationReport report;
  report.name = "smaller_angle_exists";
  if (x == y) return report;
  std::vector<Crossing> mutual = engine.crossings(x, y);
  std::vector<CrossingPair> pairs = canceling_pairs(mutual);
  if (pairs.empty()) return report;

  auto angles_of = [](const std::vector<Crossing>& crs) {
    std::vector<double> out;
    for (const Crossing& c : crs) out.push_back(c.angle);
    return out;
  };
  std::vector<double> self_x = angles_of(engine.crossings(x, x));
  std::vector<double> self_y = angles_of(engine.crossings(y, y));
  std::vector<double> all = angles_of(mutual);
  all.insert(all.end(), self_x.begin(), self_x.end());
  all.insert(all.end(), self_y.begin(), self_y.end());

  double lx = engine.geodesic_of(x).length;
  double ly = engine.geodesic_of(y).length;
  bool equal_lengths = std::abs(lx - ly) < tol::kCoincidence;

  for (const auto& [p, q] : pairs) {
    ++report.instances;
    double theta = std::max(p.angle, q.angle);
    double best = INFINITY;
    if (equal_lengths) {
      for (double u : self_x) {
        for (double v : self_y) {
          if (std::abs(u - v) < limits.angle) best = std::min(best, std::max(u, v));
        }
      }
    } else {
      for (double a : all) best = std::min(best, a);
    }
    std::ostringstream os;
    os.precision(12);
    os << format(loop_product_class(p)) << " at angle " << theta;
    if (best < theta - limits.margin) {
      report.residual(0.0);
    } else if (best < theta) {
      report.notes.push_back(os.str() + ": smaller angle " + std::to_string(best) +
                             " within the strictness margin");
    } else {
      report.failures.push_back(os.str() + ": no crossing with a smaller forward angle");
    }
  }
  return report;
}

VerificationReport check_minimal_angle_unmatched(const Engine& engine, const CyclicWord& x, int n,
                                                 const Tolerances& limits) {
  VerificationReport report;
  report.name = "minimal_angle_unmatched";
  std::vector<Crossing> self = engine.crossings(x, x);
  if (self.empty()) return report;
  double smallest = INFINITY;
  for (const Crossing& c : self) smallest = std::min(smallest, c.angle);
  for (const auto& [p, q] : canceling_pairs(engine, x, power(x, n))) {
    ++report.instances;
    if (std::abs(p.angle - smallest) < limits.margin || std::abs(q.angle - smallest) < limits.margin) {
      report.failures.push_back(format(x) + ": canceling pair at the minimal self-crossing angle");
    }
  }
  return report;
}

Zigzag build_zigzag(const Engine& engine, const Crossing& cr) {
  Word translation = cr.other * cr.base->rep;
  Isometry mat = word_to_matrix(engine.surface(), translation);
  return Zigzag{translation, mat, cr.point, cr.base->mat.inverse().apply(cr.point)};
}

double ultraparallel_distance(const DirectedGeodesic& g1, const DirectedGeodesic& g2) {
  Isometry n = normalizer(g1);
  BoundaryPoint u = n.apply(g2.from());
  BoundaryPoint v = n.apply(g2.to());
  if (u.is_infinite() || v.is_infinite() || !(u.value() * v.value() > 0.0)) {
    throw std::invalid_argument("lines are not ultraparallel");
  }
  double lo = std::min(std::abs(u.value()), std::abs(v.value()));
  double hi = std::max(std::abs(u.value()), std::abs(v.value()));
  return std::acosh((hi + lo) / (hi - lo));
}

namespace {

// The zigzag vertices of long terms lie extremely close to the real axis, so
// the symmetry and midpoint checks rebuild them in extended precision from
// the generator matrices.
using precise::Mat;
using precise::Pt;
using precise::Real;
using precise::fixed_points;
using precise::modulus;
using precise::normalizer_of;
using precise::word_mat;

Pt axes_crossing(const Mat& m1, const Mat& m2) {
  auto [p, q] = fixed_points(m1);
  auto [u, v] = fixed_points(m2);
  Pt out;
  if (!precise::crossing_of(p, q, u, v, out)) throw Error(ErrorKind::ConsistencyError, "axes do not cross");
  return out;
}

}  // namespace

namespace {

// Both zigzags of a canceling pair in coordinates where the term axis runs
// from 0 to infinity and the term translation is z -> e^ell z, over periods
// -span..span, together with the mirror radii.
struct SymmetryState {
  std::vector<Pt> p_vertices, p_previous, q_vertices, q_previous;
  Real ell, stretch, r_u, r_v;
  Mat back;
};

// Returns a failure description, or an empty string on success.
std::string build_symmetry(const Engine& engine, const CrossingPair& pair, int span, double tolerance,
                           SymmetryState& st) {
  Zigzag zp = build_zigzag(engine, pair.first);
  Zigzag zq = build_zigzag(engine, pair.second);
  if (canonical_class(zp.translation) != canonical_class(zq.translation)) {
    return "VertexMismatch: zigzags translate along different classes " + format(canonical_class(zp.translation)) +
           " and " + format(canonical_class(zq.translation));
  }
  const SurfaceSpec& s = engine.surface();
  const Mat x = word_mat(s, pair.first.base->rep);
  const Mat hp = word_mat(s, pair.first.other);
  const Mat hq = word_mat(s, pair.second.other);
  // Move the Q zigzag so that both are invariant under the same translation.
  const Mat c = word_mat(s, conjugator(zp.translation, zq.translation));
  const Mat m = hp * x;

  Pt p_vertex = axes_crossing(x, hp);
  Pt q_vertex = axes_crossing(x, hq);
  Pt p_prev = x.inverse().apply(p_vertex);
  Pt q_prev = x.inverse().apply(q_vertex);
  q_vertex = c.apply(q_vertex);
  q_prev = c.apply(q_prev);

  auto [rep, att] = fixed_points(m);
  const Mat n = normalizer_of(rep, att);
  st.back = n.inverse();
  st.ell = precise::translation_length(m);
  st.stretch = exp(st.ell);

  auto orbit = [&](const Pt& v) {
    Pt w = n.apply(v);
    std::vector<Pt> out;
    for (int k = -span; k <= span; ++k) {
      Real f = pow(st.stretch, k);
      out.push_back(Pt{w.x * f, w.y * f});
    }
    return out;
  };
  st.p_vertices = orbit(p_vertex);
  st.p_previous = orbit(p_prev);
  st.q_vertices = orbit(q_vertex);
  st.q_previous = orbit(q_prev);

  Pt moved = n.apply(m.apply(p_prev));
  Pt expected{st.p_previous[span].x * st.stretch, st.p_previous[span].y * st.stretch};
  if (precise::distance(moved, expected) > tolerance) {
    return "translation does not act as a dilation along the term axis";
  }

  // Q' is the lift of Q on the same side of the term axis as P', nearest along it.
  const Pt p_prime = st.p_vertices[span];
  const std::vector<Pt>& q_family =
      (st.q_vertices[span].x < 0) == (p_prime.x < 0) ? st.q_vertices : st.q_previous;
  auto along = [&](const Pt& v) { return abs(log(modulus(v) / modulus(p_prime))); };
  Pt q_prime = q_family.front();
  for (const Pt& cand : q_family) {
    if (along(cand) < along(q_prime)) q_prime = cand;
  }

  // U is the perpendicular to the axis through the midpoint of P'Q'. P' and
  // Q' must be equidistant from the axis, so it is the circle of radius
  // sqrt(|P'| |Q'|); V is the circle half a term length before it.
  st.r_u = sqrt(modulus(p_prime) * modulus(q_prime));
  st.r_v = st.r_u / sqrt(st.stretch);
  return {};
}

}  // namespace

SymmetryPicture symmetry_picture(const Engine& engine, const CrossingPair& pair, int periods) {
  SymmetryState st;
  std::string problem = build_symmetry(engine, pair, periods, Tolerances{}.vertex, st);
  if (!problem.empty()) throw Error(ErrorKind::VertexMismatch, problem);
  SymmetryPicture out;
  out.half_length = (st.ell / 2).convert_to<double>();
  auto chain = [&](const std::vector<Pt>& prev, const std::vector<Pt>& vert) {
    std::vector<PlanePoint> pts;
    for (std::size_t k = 0; k < vert.size(); ++k) {
      for (const Pt* v : {&prev[k], &vert[k]}) {
        pts.push_back(PlanePoint((v->x / st.r_u).convert_to<double>(), (v->y / st.r_u).convert_to<double>()));
      }
    }
    return pts;
  };
  out.p_zigzag = chain(st.p_previous, st.p_vertices);
  out.q_zigzag = chain(st.q_previous, st.q_vertices);
  return out;
}

VerificationReport check_reflection_symmetry(const Engine& engine, const CrossingPair& pair,
                                             const Tolerances& limits) {
  VerificationReport report;
  report.name = "reflection_symmetry";
  report.instances = 1;
  constexpr int kSpan = 2;
  SymmetryState st;
  std::string problem = build_symmetry(engine, pair, kSpan, limits.vertex, st);
  if (!problem.empty()) {
    report.failures.push_back(problem);
    return report;
  }
  const std::vector<Pt>& p_vertices = st.p_vertices;
  const std::vector<Pt>& p_previous = st.p_previous;
  const std::vector<Pt>& q_vertices = st.q_vertices;
  const std::vector<Pt>& q_previous = st.q_previous;
  const Real& r_u = st.r_u;
  const Real& r_v = st.r_v;
  const Real& ell = st.ell;
  const Mat& back = st.back;

  std::vector<Pt> p_all = p_vertices;
  p_all.insert(p_all.end(), p_previous.begin(), p_previous.end());
  std::vector<Pt> q_all = q_vertices;
  q_all.insert(q_all.end(), q_previous.begin(), q_previous.end());

  auto check_mirror = [&](const Real& radius, const char* name) {
    auto match = [&](const Pt& v, const std::vector<Pt>& targets) {
      Real scale = radius * radius / (v.x * v.x + v.y * v.y);
      Pt image{v.x * scale, v.y * scale};
      Real best = precise::distance(image, targets.front());
      for (const Pt& t : targets) best = std::min(best, precise::distance(image, t));
      double r = best.convert_to<double>();
      report.residual(r);
      if (r > limits.vertex) {
        Pt orig = back.apply(v);
        report.failures.push_back(std::string("VertexMismatch: reflection in ") + name + " sends " +
                                  describe(PlanePoint(orig.x.convert_to<double>(), orig.y.convert_to<double>())) +
                                  " " + std::to_string(r) + " away from the other zigzag");
      }
    };
    // One period of each zigzag, both directions.
    for (const Pt& v : {p_vertices[kSpan], p_previous[kSpan]}) match(v, q_all);
    for (const Pt& v : {q_vertices[kSpan], q_previous[kSpan]}) match(v, p_all);
  };
  check_mirror(r_u, "U");
  check_mirror(r_v, "V");

  // Distance between the mirrors, measured in the original plane.
  Real u_from = back.apply(Real(-r_u)), u_to = back.apply(r_u);
  Mat to_u = normalizer_of(u_from, u_to);
  Real e1 = abs(to_u.apply(back.apply(Real(-r_v)))), e2 = abs(to_u.apply(back.apply(r_v)));
  Real lo = std::min(e1, e2), hi = std::max(e1, e2);
  double spacing = precise::acosh_of((hi + lo) / (hi - lo)).convert_to<double>();
  double half = ell.convert_to<double>() / 2.0;
  double spacing_residual = std::abs(spacing - half);
  report.residual(spacing_residual);
  if (spacing_residual >= limits.spacing) {
    report.failures.push_back("distance(U, V) = " + std::to_string(spacing) +
                              " but half the term length is " + std::to_string(half));
  }

  // Which kinds of segment each mirror cuts, for the configuration record.
  auto cut_kinds = [](const Real& radius, const std::vector<Pt>& prev, const std::vector<Pt>& vert) {
    auto across = [&](const Pt& a, const Pt& b) { return (modulus(a) < radius) != (modulus(b) < radius); };
    std::string kinds;
    for (std::size_t k = 0; k < vert.size(); ++k) {
      if (across(prev[k], vert[k])) kinds += 'x';
      if (k + 1 < vert.size() && across(vert[k], prev[k + 1])) kinds += 'y';
    }
    return kinds;
  };
  report.notes.push_back("U cuts " + cut_kinds(r_u, p_previous, p_vertices) + "/" +
                         cut_kinds(r_u, q_previous, q_vertices) + ", V cuts " +
                         cut_kinds(r_v, p_previous, p_vertices) + "/" +
                         cut_kinds(r_v, q_previous, q_vertices));
  return report;
}

VerificationReport check_term_midpoints(const Engine& engine, const CyclicWord& x, const CyclicWord& y,
                                        const Tolerances& limits) {
  VerificationReport report;
  report.name = "term_midpoints";
  if (x == y || !is_primitive(x)) return report;
  const Mat xm = word_mat(engine.surface(), engine.geodesic_of(x).rep);
  const auto [xp, xq] = fixed_points(xm);
  const Real lx = precise::translation_length(xm);
  for (const Crossing& cr : engine.crossings(x, y)) {
    ++report.instances;
    Mat hm = word_mat(engine.surface(), cr.other);
    auto [hp, hq] = fixed_points(hm);
    Pt p;
    if (!precise::crossing_of(xp, xq, hp, hq, p)) {
      report.failures.push_back(format(x) + " with " + format(y) + ": crossing lift does not cross");
      continue;
    }
    Mat term = hm * xm;
    auto [tp, tq] = fixed_points(term);
    Pt s = precise::along(xp, xq, p, -lx / 2);
    Pt e = precise::along(hp, hq, p, precise::translation_length(hm) / 2);
    // The midpoint of x with respect to P is S or X(S), which lies on the
    // axis of X H instead.
    Real on_term;
    if (cr.t >= lx.convert_to<double>() / 2.0) {
      on_term = precise::distance_to_line(s, tp, tq);
    } else {
      auto [ap, aq] = fixed_points(xm * hm);
      on_term = precise::distance_to_line(xm.apply(s), ap, aq);
    }
    Real r = std::max({precise::distance_to_line(s, tp, tq), precise::distance_to_line(e, tp, tq), on_term,
                       Real(abs(2 * precise::distance(s, e) - precise::translation_length(term)))});
    double rd = r.convert_to<double>();
    report.residual(rd);
    if (!(rd < limits.identity)) {
      report.failures.push_back(format(x) + " with " + format(y) + " at t = " + std::to_string(cr.t) +
                                ": residual " + std::to_string(rd));
    }
  }
  return report;
}

namespace {

// Entrywise distance up to sign, relative to the larger entries of `a`; the
// measure behind Isometry::projectively_equal.
double projective_gap(const Isometry& a, const Isometry& b) {
  double scale = std::max({1.0, std::abs(a.a()), std::abs(a.b()), std::abs(a.c()), std::abs(a.d())});
  double same = std::max({std::abs(a.a() - b.a()), std::abs(a.b() - b.b()), std::abs(a.c() - b.c()),
                          std::abs(a.d() - b.d())});
  double flipped = std::max({std::abs(a.a() + b.a()), std::abs(a.b() + b.b()), std::abs(a.c() + b.c()),
                             std::abs(a.d() + b.d())});
  return std::min(same, flipped) / scale;
}

}  // namespace

LinkedPair random_linked_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> endpoint(-5.0, 5.0);
  std::uniform_real_distribution<double> length(0.2, 6.0);
  while (true) {
    double p1 = endpoint(rng), p2 = endpoint(rng), q1 = endpoint(rng), q2 = endpoint(rng);
    double lx = length(rng), ly = length(rng);
    if (std::min({std::abs(p1 - p2), std::abs(q1 - q2), std::abs(p1 - q1), std::abs(p1 - q2),
                  std::abs(p2 - q1), std::abs(p2 - q2)}) < 1e-3) {
      continue;
    }
    DirectedGeodesic gx{BoundaryPoint(p1), BoundaryPoint(p2)};
    DirectedGeodesic gy{BoundaryPoint(q1), BoundaryPoint(q2)};
    if (!linked(gx, gy)) continue;
    return LinkedPair{hyperbolic_generator(p1, p2, lx), hyperbolic_generator(q1, q2, ly), *intersect(gx, gy)};
  }
}

VerificationReport check_length_formula(std::uint64_t seed, int trials, const Tolerances& limits) {
  VerificationReport report;
  report.name = "length_formula";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    LinkedPair lp = random_linked_pair(rng);
    ++report.instances;
    double theta = forward_angle(axis(lp.x), axis(lp.y), lp.crossing);
    double expected = beardon_length(translation_length(lp.x), translation_length(lp.y), forward_alpha(theta));
    double r = std::abs(translation_length(lp.y * lp.x) - expected);
    report.residual(r);
    if (!(r < limits.identity)) report.failures.push_back("trial " + std::to_string(i) + ": residual " + std::to_string(r));
  }
  return report;
}

VerificationReport check_product_axis(std::uint64_t seed, int trials, const Tolerances& limits) {
  VerificationReport report;
  report.name = "product_axis";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    LinkedPair lp = random_linked_pair(rng);
    ++report.instances;
    const PlanePoint& p = lp.crossing;
    DirectedGeodesic ax = axis(lp.x), ay = axis(lp.y);
    double lx = translation_length(lp.x), ly = translation_length(lp.y);
    auto check = [&](const Isometry& product, const PlanePoint& first, const PlanePoint& second) {
      DirectedGeodesic t = axis(product);
      double r = std::max({distance_to_line(first, t), distance_to_line(second, t),
                           std::abs(2.0 * dist(first, second) - translation_length(product))});
      report.residual(r);
      bool ordered = line_parameter(t, first) < line_parameter(t, second);
      if (!(r < limits.identity) || !ordered) {
        report.failures.push_back("trial " + std::to_string(i) + ": residual " + std::to_string(r) +
                                  (ordered ? "" : ", wrong direction"));
      }
    };
    check(lp.y * lp.x, point_along(ax, p, -lx / 2.0), point_along(ay, p, ly / 2.0));
    check(lp.x * lp.y, point_along(ay, p, -ly / 2.0), point_along(ax, p, lx / 2.0));
  }
  return report;
}

VerificationReport check_rotation_decomposition(std::uint64_t seed, int trials,
                                                const Tolerances& limits) {
  VerificationReport report;
  report.name = "rotation_decomposition";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    LinkedPair lp = random_linked_pair(rng);
    ++report.instances;
    const PlanePoint& p = lp.crossing;
    PlanePoint s = point_along(axis(lp.x), p, -translation_length(lp.x) / 2.0);
    PlanePoint t = point_along(axis(lp.y), p, translation_length(lp.y) / 2.0);
    double gap = std::max({projective_gap(rotation_pi(p) * rotation_pi(s), lp.x),
                           projective_gap(rotation_pi(t) * rotation_pi(p), lp.y),
                           projective_gap(rotation_pi(t) * rotation_pi(s), lp.y * lp.x)});
    report.residual(gap);
    if (!(gap <= limits.matrix)) report.failures.push_back("trial " + std::to_string(i) + ": gap " + std::to_string(gap));
  }
  return report;
}

BracketResult jacobiator(const Engine& engine, const CyclicWord& x, const CyclicWord& y,
                         const CyclicWord& z) {
  auto single = [](const CyclicWord& c) {
    BracketResult r;
    r.add(c, 1);
    return r;
  };
  BracketResult out = bracket(engine, single(x), bracket(engine, y, z));
  out += bracket(engine, single(y), bracket(engine, z, x));
  out += bracket(engine, single(z), bracket(engine, x, y));
  return out;
}

std::vector<CyclicWord> primitive_corpus(unsigned rank, int max_length) {
  std::set<CyclicWord> classes;
  const unsigned letters = 2 * rank;
  for (int n = 1; n <= max_length; ++n) {
    std::vector<unsigned> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Letter> raw;
      bool reduced = true;
      for (int i = 0; i < n && reduced; ++i) {
        Letter l = Letter::from_code(static_cast<std::uint8_t>(digits[static_cast<std::size_t>(i)]));
        if (!raw.empty() && raw.back() == l.inverse()) reduced = false;
        raw.push_back(l);
      }
      if (reduced && !(n > 1 && raw.front() == raw.back().inverse())) {
        CyclicWord c = canonical_class(reduce(raw));
        if (is_primitive(c)) classes.insert(c);
      }
      int pos = n - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == letters) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return {classes.begin(), classes.end()};
}

}  // namespace geobracket
