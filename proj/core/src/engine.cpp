#include "geobracket/engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "geobracket/error.hpp"
#include "precise.hpp"

namespace geobracket {

Engine::Engine(SurfaceSpec surface, int radius) : surface_(std::move(surface)), radius_(radius) {
  if (radius_ < 0) throw std::invalid_argument("radius must be non-negative");
}

ClosedGeodesic Engine::geodesic_of(const CyclicWord& c) const {
  Word rep = c.as_word();
  Isometry mat = word_to_matrix(surface_, rep);
  return ClosedGeodesic{c, rep, mat, axis(mat), translation_length(mat)};
}

namespace {

// Relative endpoint separation below which an axis counts as unresolved.
constexpr double kResolution = 1e-10;

struct Placement {
  PlanePoint point;
  double t;
  int sign;
  double angle;
};

// Coordinates in which the root axis is the imaginary axis directed upwards;
// each lift of y is placed there from its conjugator in extended precision.
class PreciseFrame {
 public:
  PreciseFrame(const SurfaceSpec& s, const Word& root_rep, const Word& y_rep) : surface_(s) {
    using namespace precise;
    Mat root = word_mat(s, root_rep);
    auto [p, q] = fixed_points(root);
    to_frame_ = normalizer_of(p, q);
    from_frame_ = to_frame_.inverse();
    origin_ = log(modulus(to_frame_.apply(Pt{0, 1})));
    std::tie(y_from_, y_to_) = fixed_points(word_mat(s, y_rep));
    length_ = translation_length(root).convert_to<double>();
  }

  double root_length() const noexcept { return length_; }

  std::optional<Placement> place(const Word& conjugator) const {
    using namespace precise;
    Mat g = word_mat(surface_, conjugator);
    Real u = to_frame_.apply(g.apply(y_from_));
    Real v = to_frame_.apply(g.apply(y_to_));
    Real prod = -u * v;
    if (!(prod > 0)) return std::nullopt;
    Real h = sqrt(prod);
    Real centre = (u + v) / 2;
    // Tangent of the lift at ih is (h, centre) when it runs left to right.
    bool rightward = v > u;
    double angle = atan2(h, rightward ? centre : Real(-centre)).convert_to<double>();
    double t = (log(h) - origin_).convert_to<double>();
    return Placement{to_plane(from_frame_.apply(Pt{0, h})), t, rightward ? -1 : 1, angle};
  }

 private:
  const SurfaceSpec& surface_;
  precise::Mat to_frame_;
  precise::Mat from_frame_;
  precise::Real origin_;
  precise::Real y_from_;
  precise::Real y_to_;
  double length_;
};

std::optional<Placement> place_in_double(const DirectedGeodesic& base, const Lift& lift) {
  std::optional<PlanePoint> p = intersect(base, lift.ax);
  if (!p) return std::nullopt;
  return Placement{*p, line_parameter(base, *p), crossing_sign(base, lift.ax, *p),
                   forward_angle(base, lift.ax, *p)};
}

}  // namespace

std::shared_ptr<const LiftSet> Engine::lifts(const Word& rep) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(rep);
    if (it != cache_.end()) return it->second;
  }
  auto out = std::make_shared<LiftSet>();
  const Isometry base = word_to_matrix(surface_, rep);
  const DirectedGeodesic base_axis = axis(base);
  // Moving the base axis by the conjugator is far better conditioned than
  // solving for the fixed points of the (large) conjugate matrix.
  for (Conjugate& c : conjugates_with_conjugators(rep, radius_, surface_.rank)) {
    Isometry g = word_to_matrix(surface_, c.conjugator);
    BoundaryPoint u = g.apply(base_axis.from());
    BoundaryPoint v = g.apply(base_axis.to());
    if (!u.is_infinite() && !v.is_infinite()) {
      double gap = std::abs(u.value() - v.value());
      double scale = std::max({1.0, std::abs(u.value()), std::abs(v.value())});
      if (gap <= kResolution * scale) {
        out->unresolved_diameter = std::max(out->unresolved_diameter, kResolution * scale);
        continue;
      }
    }
    out->lifts.push_back(
        Lift{std::move(c.element), std::move(c.conjugator), g * base * g.inverse(), DirectedGeodesic(u, v)});
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(rep, std::move(out)).first->second;
}

std::vector<Crossing> Engine::crossings(const CyclicWord& x, const CyclicWord& y) const {
  auto [root_class, periods] = is_power(x);
  auto base = std::make_shared<const ClosedGeodesic>(geodesic_of(x));
  const ClosedGeodesic root = periods == 1 ? *base : geodesic_of(root_class);

  std::vector<Crossing> out;
  auto candidates = lifts(y.as_word());
  // A line through a window point of height h has diameter at least 2h.
  double floor_height = std::min(point_at_parameter(root.ax, 0.0).y(),
                                 point_at_parameter(root.ax, root.length).y());
  if (candidates->unresolved_diameter >= 2.0 * floor_height) {
    throw Error(ErrorKind::ConsistencyError,
                "lifts of " + format(y) + " below floating point resolution may cross the window of " +
                    format(x) + "; use a smaller radius");
  }
  // Axes through infinity (possible for user surfaces) stay in double precision.
  std::optional<PreciseFrame> frame;
  double window = root.length;
  if (!root.ax.from().is_infinite() && !root.ax.to().is_infinite()) {
    try {
      frame.emplace(surface_, root.rep, y.as_word());
      window = frame->root_length();
    } catch (const Error&) {
      frame.reset();
    }
  }

  for (const Lift& lift : candidates->lifts) {
    if (!linked(root.ax, lift.ax)) continue;
    // Lifts commuting with the root share its axis and never cross it.
    if (commute(lift.element, root.rep)) continue;
    std::optional<Placement> at;
    if (frame) {
      // Refine only near the window; double t is good to far better than this.
      constexpr double kSlack = 1e-3;
      std::optional<PlanePoint> rough = intersect(root.ax, lift.ax);
      if (!rough) continue;
      double t = line_parameter(root.ax, *rough);
      if (t < -kSlack || t >= window + kSlack) continue;
      at = frame->place(lift.conjugator);
    } else {
      at = place_in_double(root.ax, lift);
    }
    if (!at) continue;
    if (at->t < 0.0 || at->t >= window) continue;

    Word shift;
    for (int j = 0; j < periods; ++j) {
      if (j == 0) {
        out.push_back(Crossing{base, lift.element, lift.mat, lift.ax, at->point, at->t, at->sign, at->angle});
      } else {
        shift = shift * root.rep;
        Isometry m = word_to_matrix(surface_, shift);
        Word h = shift * lift.element * invert(shift);
        out.push_back(Crossing{base, std::move(h), m * lift.mat * m.inverse(), m.apply(lift.ax),
                               m.apply(at->point), at->t + j * window, at->sign, at->angle});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.other < b.other;
  });
  return out;
}

int Engine::self_intersection_number(const CyclicWord& x) const {
  if (!is_primitive(x)) throw Error(ErrorKind::NonPrimitive, format(x) + " is a proper power");
  std::size_t count = crossings(x, x).size();
  if (count % 2 != 0) {
    throw Error(ErrorKind::OddCount, format(x) + " has " + std::to_string(count) +
                                         " self-crossing lifts; try a larger radius");
  }
  return static_cast<int>(count / 2);
}

int Engine::intersection_number(const CyclicWord& x, const CyclicWord& y) const {
  return static_cast<int>(crossings(x, y).size());
}

ClosedGeodesic geodesic_of(const SurfaceSpec& s, const CyclicWord& c) {
  return Engine(s, 0).geodesic_of(c);
}

std::vector<Crossing> crossings(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y,
                                int radius) {
  return Engine(s, radius).crossings(x, y);
}

int self_intersection_number(const SurfaceSpec& s, const CyclicWord& x, int radius) {
  return Engine(s, radius).self_intersection_number(x);
}

int intersection_number(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y, int radius) {
  return Engine(s, radius).intersection_number(x, y);
}

int sign_at(const Crossing& cr, StrandOrder order) {
  if (cr.angle < tol::kCoincidence || M_PI - cr.angle < tol::kCoincidence) {
    throw Error(ErrorKind::TangentDegenerate, "forward angle " + std::to_string(cr.angle));
  }
  return order == StrandOrder::BaseFirst ? cr.sign : -cr.sign;
}

Word loop_product_word(const Crossing& cr) { return cr.base->rep * cr.other; }

CyclicWord loop_product_class(const Crossing& cr) {
  Word w = loop_product_word(cr);
  if (w.empty()) {
    throw Error(ErrorKind::IdentityClass, "loop product at a crossing reduced to the identity");
  }
  return canonical_class(w);
}

PlanePoint midpoint_wrt(const ClosedGeodesic& g, const Crossing& cr) {
  if (!lies_on(g.ax, cr.point)) {
    throw Error(ErrorKind::PointNotOnAxis, "crossing is not on the axis of " + format(g.cls));
  }
  double t = line_parameter(g.ax, cr.point) + g.length / 2.0;
  t -= g.length * std::floor(t / g.length);
  return point_at_parameter(g.ax, t);
}

}  // namespace geobracket
