#ifndef GEOBRACKET_ENGINE_HPP
#define GEOBRACKET_ENGINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "geobracket/hyperbolic.hpp"
#include "geobracket/surface.hpp"
#include "geobracket/word.hpp"

namespace geobracket {

/// A free homotopy class together with one lift of its closed geodesic.
struct ClosedGeodesic {
  CyclicWord cls;
  /// The canonical rotation read as a based word; mat is its image.
  Word rep;
  Isometry mat;
  DirectedGeodesic ax;
  double length;
};

/// A lift of a class: an exact conjugate element and its axis.
struct Lift {
  Word element;
  /// Shortest g with element = g rep g^-1.
  Word conjugator;
  Isometry mat;
  DirectedGeodesic ax;
};

/// Lifts of one based word. Conjugates whose axis is too small to resolve in
/// double precision are left out; `unresolved_diameter` bounds their
/// Euclidean size so callers can tell whether any could matter.
struct LiftSet {
  std::vector<Lift> lifts;
  double unresolved_diameter = 0.0;
};

/// One intersection point of the geodesics of two classes, seen from the
/// lift ax(base.mat) of the first one.
///
/// The crossing parameter t is the arclength along the base axis measured
/// from the foot of the perpendicular dropped from i, so crossings are
/// enumerated over the fundamental window 0 <= t < base.length. Point, t,
/// sign and angle are evaluated in extended precision and then rounded.
struct Crossing {
  std::shared_ptr<const ClosedGeodesic> base;
  /// Conjugate h of the second class's based representative whose axis
  /// meets the base axis at `point`.
  Word other;
  Isometry other_mat;
  DirectedGeodesic other_ax;
  PlanePoint point;
  double t;
  /// det(base tangent, other tangent) at the crossing.
  int sign;
  /// Forward angle in (0, pi).
  double angle;
};

enum class StrandOrder { BaseFirst, OtherFirst };

/// Enumerates lifts by conjugating with words of length <= radius and caches
/// them per based word. Thread safe; all queries are deterministic.
class Engine {
 public:
  Engine(SurfaceSpec surface, int radius);

  const SurfaceSpec& surface() const noexcept { return surface_; }
  int radius() const noexcept { return radius_; }

  ClosedGeodesic geodesic_of(const CyclicWord& c) const;

  /// Distinct conjugates of `rep` up to the engine radius, with matrices and axes.
  std::shared_ptr<const LiftSet> lifts(const Word& rep) const;

  /// Crossings of the geodesics of x and y, ascending in t then `other`.
  /// Lifts of y sharing the base axis are excluded. When x = root^m the
  /// crossings of the root are replicated over the m periods of the window.
  /// Throws ConsistencyError if unresolvably small lifts could reach the window.
  std::vector<Crossing> crossings(const CyclicWord& x, const CyclicWord& y) const;

  /// Half the number of self-crossings. Throws NonPrimitive, OddCount.
  int self_intersection_number(const CyclicWord& x) const;

  /// Number of crossings of x with y (x != y).
  int intersection_number(const CyclicWord& x, const CyclicWord& y) const;

 private:
  SurfaceSpec surface_;
  int radius_;
  mutable std::mutex mutex_;
  mutable std::map<Word, std::shared_ptr<const LiftSet>> cache_;
};

ClosedGeodesic geodesic_of(const SurfaceSpec& s, const CyclicWord& c);
std::vector<Crossing> crossings(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y,
                                int radius);
int self_intersection_number(const SurfaceSpec& s, const CyclicWord& x, int radius);
int intersection_number(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y, int radius);

/// Sign of the crossing with the given strand first.
int sign_at(const Crossing& cr, StrandOrder order = StrandOrder::BaseFirst);

/// Class of the loop product at the crossing: base representative followed by
/// the crossing conjugate. Throws IdentityClass.
CyclicWord loop_product_class(const Crossing& cr);

/// Word of the loop product before canonicalisation (rep * other).
Word loop_product_word(const Crossing& cr);

/// Point at parameter (t + length/2) mod length on the axis of g, i.e. the
/// lift of the point halving the closed geodesic from the crossing.
/// Throws PointNotOnAxis.
PlanePoint midpoint_wrt(const ClosedGeodesic& g, const Crossing& cr);

}  // namespace geobracket

#endif  // GEOBRACKET_ENGINE_HPP
