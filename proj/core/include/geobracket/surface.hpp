#ifndef GEOBRACKET_SURFACE_HPP
#define GEOBRACKET_SURFACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geobracket/hyperbolic.hpp"
#include "geobracket/word.hpp"

namespace geobracket {

/// Half-disk on the boundary line, given by its center on the real axis.
struct SchottkyDisk {
  double center;
  double radius;
};

/// Generator i maps the exterior of `source` onto the interior of `target`.
struct DiskPair {
  SchottkyDisk source;
  SchottkyDisk target;
};

/// A surface with geodesic boundary presented as a Schottky group. When no
/// disks are given, the isometric circles of the generators are used.
struct SurfaceSpec {
  unsigned rank = 0;
  std::vector<Isometry> generators;
  std::string label;
  std::optional<std::vector<DiskPair>> schottky_disks;
};

struct ValidationReport {
  std::string label;
  unsigned rank = 0;
  std::vector<std::string> checks;
  /// Crossing counts i(g_i, g_j) of the generator geodesics; diagonal entries
  /// are self-intersection numbers.
  std::vector<std::vector<int>> crossing_pattern;
  int boundary_components = 0;
  int genus = 0;
  /// "pants", "holed-torus", or "genus G, B boundary components".
  std::string topology;
};

/// Checks hyperbolicity of the generators and the ping-pong condition; fills
/// in the quotient topology. Throws InvalidSurface naming the first violation.
ValidationReport validate(const SurfaceSpec& s, int radius = 8);

/// Ping-pong disks actually used for validation.
std::vector<DiskPair> effective_disks(const SurfaceSpec& s);

/// The isometric circles of g and g^-1.
DiskPair isometric_disks(const Isometry& g);

/// Hyperbolic element with the given repelling and attracting fixed points
/// and translation length.
Isometry hyperbolic_generator(double repelling, double attracting, double length);

/// Product of generator matrices along w, renormalised at every step.
Isometry word_to_matrix(const SurfaceSpec& s, const Word& w);

/// Built-in surfaces: "pants" and "holed-torus". `scale` multiplies every
/// generator's translation length. Throws UnknownSurface / InvalidSurface.
SurfaceSpec builtin(std::string_view name, double scale = 1.0);

std::vector<std::string> builtin_names();

/// JSON surface description; see README for the schema. Throws ParseError
/// on malformed input or unknown fields and InvalidSurface on bad geometry.
SurfaceSpec parse_surface_config(std::string_view json_text);
SurfaceSpec load_surface_config(const std::string& path);

/// Built-in name or path to a config file.
SurfaceSpec resolve_surface(const std::string& name_or_path, double scale = 1.0);

}  // namespace geobracket

#endif  // GEOBRACKET_SURFACE_HPP
