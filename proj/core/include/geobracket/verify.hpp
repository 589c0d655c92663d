#ifndef GEOBRACKET_VERIFY_HPP
#define GEOBRACKET_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geobracket/bracket.hpp"
#include "geobracket/engine.hpp"

namespace geobracket {

/// Thresholds of the verification checks; the defaults are the acceptance
/// tolerances.
struct Tolerances {
  /// Forward angles of matched canceling crossings.
  double angle = 1e-6;
  /// Strictness margin when one angle must be smaller than another.
  double margin = 1e-9;
  /// Reflected zigzag vertices against the other zigzag (hyperbolic distance).
  double vertex = 1e-6;
  /// Distance of the two mirrors against half the term length.
  double spacing = 1e-8;
  /// Length and distance identities for products of hyperbolics.
  double identity = 1e-8;
  /// Projective comparison of matrices.
  double matrix = 1e-9;
};

struct VerificationReport {
  std::string name;
  long instances = 0;
  std::vector<std::string> failures;
  double max_residual = 0.0;
  /// Observations that are not failures (configurations met, margin cases).
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
  void residual(double r) noexcept {
    if (r > max_residual) max_residual = r;
  }
  void absorb(const VerificationReport& other);
};

nlohmann::ordered_json to_json(const VerificationReport& r);

/// On the surface: for every crossing P of x with y, the midpoint of x with
/// respect to P and the midpoint of y with respect to P lie on a lift of the
/// term geodesic, half its length apart.
VerificationReport check_term_midpoints(const Engine& engine, const CyclicWord& x, const CyclicWord& y,
                                        const Tolerances& limits = {});

/// Two hyperbolic isometries whose axes cross, drawn with fixed points in
/// [-5, 5] and translation lengths in [0.2, 6].
struct LinkedPair {
  Isometry x;
  Isometry y;
  PlanePoint crossing;
};

LinkedPair random_linked_pair(std::mt19937_64& rng);

/// translation_length(Y * X) against beardon_length at alpha = pi - theta.
VerificationReport check_length_formula(std::uint64_t seed, int trials, const Tolerances& limits = {});

/// With X applied first, the axis of Y * X runs through S (half of l_x behind
/// the crossing on the axis of X) and then T (half of l_y ahead on the axis of
/// Y), and 2 d(S, T) is its translation length. The mirrored statement for
/// X * Y is checked as well.
VerificationReport check_product_axis(std::uint64_t seed, int trials, const Tolerances& limits = {});

/// X = R_P R_S, Y = R_T R_P and Y * X = R_T R_S projectively (1e-9).
VerificationReport check_rotation_decomposition(std::uint64_t seed, int trials,
                                                const Tolerances& limits = {});

/// [x, [y, z]] + [y, [z, x]] + [z, [x, y]].
BracketResult jacobiator(const Engine& engine, const CyclicWord& x, const CyclicWord& y,
                         const CyclicWord& z);

/// Crossing count of x with y computed from boundary data only: circular
/// order of the four endpoints decides linking, a cross ratio of the endpoints
/// locates the crossing in the window. Shares only the lift enumeration with
/// Engine::crossings.
int linking_oracle_count(const Engine& engine, const CyclicWord& x, const CyclicWord& y);

/// Crossing counts and term maps agree at radius and radius + 2. For x == y
/// the bar bracket is compared instead of the (zero) bracket.
VerificationReport radius_stability(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y,
                                    int radius);
/// Same comparison between two engines on one surface (lift caches reused).
VerificationReport radius_stability(const Engine& inner, const Engine& outer, const CyclicWord& x,
                                    const CyclicWord& y);

/// Matched canceling crossings meet at equal forward angles (tolerance 1e-6).
VerificationReport check_forward_angle_congruence(const std::vector<CrossingPair>& pairs,
                                                  const Tolerances& limits = {});
VerificationReport check_forward_angle_congruence(const Engine& engine, const CyclicWord& x,
                                                  const CyclicWord& y, const Tolerances& limits = {});

/// Every canceling pair of [x, y] at forward angle theta is undercut by a
/// crossing of smaller angle: for equal lengths a self-crossing of x and one of
/// y with a common angle below theta, otherwise any crossing of x with y or a
/// self-crossing of either.
VerificationReport check_smaller_angle_exists(const Engine& engine, const CyclicWord& x,
                                              const CyclicWord& y, const Tolerances& limits = {});

/// No canceling pair of [x, x^n] sits at the smallest self-crossing angle of x.
VerificationReport check_minimal_angle_unmatched(const Engine& engine, const CyclicWord& x, int n,
                                                 const Tolerances& limits = {});

/// Vertices of one lifted zigzag: the loop that runs once around x and then
/// once around y from a crossing, lifted to the plane.
struct Zigzag {
  /// Translation carrying the zigzag onto itself (other * base rep).
  Word translation;
  Isometry translation_mat;
  /// Vertex where the x-segment ends and the y-segment starts, and the start
  /// of that x-segment.
  PlanePoint vertex;
  PlanePoint previous;
};

Zigzag build_zigzag(const Engine& engine, const Crossing& cr);

/// Builds the perpendiculars U and V to the term axis for a canceling pair and
/// checks that reflection in either carries the vertices of one zigzag onto
/// the other (1e-6) and that U and V are half a term length apart (1e-8).
VerificationReport check_reflection_symmetry(const Engine& engine, const CrossingPair& pair,
                                             const Tolerances& limits = {});

/// The two zigzags of a canceling pair in coordinates where the term axis is
/// the imaginary axis (directed upwards) and the mirror U is the unit circle;
/// V is then the circle of radius exp(-half_length). Each zigzag lists its
/// vertices in order over 2 * periods + 1 periods. Throws VertexMismatch when
/// the pair is not made of conjugate terms.
struct SymmetryPicture {
  double half_length = 0.0;
  std::vector<PlanePoint> p_zigzag;
  std::vector<PlanePoint> q_zigzag;
};

SymmetryPicture symmetry_picture(const Engine& engine, const CrossingPair& pair, int periods = 1);

/// Distance between two disjoint, non asymptotic lines.
double ultraparallel_distance(const DirectedGeodesic& g1, const DirectedGeodesic& g2);

/// All primitive classes of cyclic length 1..max_length over `rank` generators,
/// in shortlex order.
std::vector<CyclicWord> primitive_corpus(unsigned rank, int max_length);

}  // namespace geobracket

#endif  // GEOBRACKET_VERIFY_HPP
