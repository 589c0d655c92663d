#include "geobracket/surface.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geobracket/engine.hpp"
#include "geobracket/error.hpp"

namespace geobracket {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidSurface, what); }

struct GeneratorData {
  double repelling;
  double attracting;
  double length;
};

// Built-in Schottky data. Fixed points are deliberately unsymmetric so that no
// lift of any class passes exactly through the parameter origin of another.
const std::vector<GeneratorData>& pants_data() {
  static const std::vector<GeneratorData> data{{-3.1, -1.2, 2.6}, {0.7, 2.6, 2.9}};
  return data;
}

const std::vector<GeneratorData>& holed_torus_data() {
  static const std::vector<GeneratorData> data{{-2.3, 1.1, 3.8}, {-0.8, 2.7, 4.1}};
  return data;
}

SurfaceSpec from_data(const std::vector<GeneratorData>& data, std::string label, double scale) {
  SurfaceSpec s;
  s.rank = static_cast<unsigned>(data.size());
  s.label = std::move(label);
  std::vector<DiskPair> disks;
  for (const GeneratorData& g : data) {
    Isometry m = hyperbolic_generator(g.repelling, g.attracting, g.length * scale);
    s.generators.push_back(m);
    disks.push_back(isometric_disks(m));
  }
  s.schottky_disks = std::move(disks);
  return s;
}

double real_image(const Isometry& g, double x) {
  BoundaryPoint p = g.apply(BoundaryPoint(x));
  if (p.is_infinite()) invalid("ping-pong: a disk endpoint is sent to infinity");
  return p.value();
}

void check_ping_pong(const SurfaceSpec& s, const std::vector<DiskPair>& disks,
                     std::vector<std::string>& checks) {
  std::vector<SchottkyDisk> all;
  for (const DiskPair& d : disks) {
    all.push_back(d.source);
    all.push_back(d.target);
  }
  for (const SchottkyDisk& d : all) {
    if (!(d.radius > 0.0) || !std::isfinite(d.center)) invalid("disk with non-positive radius");
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      double gap = std::abs(all[i].center - all[j].center) - all[i].radius - all[j].radius;
      if (!(gap > tol::kCoincidence)) {
        std::ostringstream os;
        os << "Schottky disks " << i << " and " << j << " are not disjoint (gap " << gap << ")";
        invalid(os.str());
      }
    }
  }
  checks.push_back("Schottky disks pairwise disjoint");

  constexpr int kSamples = 32;
  for (unsigned i = 0; i < s.rank; ++i) {
    const Isometry& g = s.generators[i];
    const DiskPair& d = disks[i];
    double scale = std::max(1.0, d.target.radius);
    for (int k = 0; k <= kSamples; ++k) {
      double theta = M_PI * (k + 0.5) / (kSamples + 1);
      std::complex<double> z = d.source.center + d.source.radius * std::polar(1.0, theta);
      PlanePoint w = g.apply(PlanePoint(z));
      double off = std::abs(std::abs(w.z() - d.target.center) - d.target.radius);
      if (off > tol::kCoincidence * scale) {
        invalid("ping-pong: generator " + std::to_string(i) + " does not map its source circle " +
                "onto its target circle");
      }
    }
    for (double x : {d.source.center - d.source.radius, d.source.center + d.source.radius}) {
      double img = real_image(g, x);
      double off = std::abs(std::abs(img - d.target.center) - d.target.radius);
      if (off > tol::kCoincidence * scale) {
        invalid("ping-pong: generator " + std::to_string(i) + " moves a source endpoint off the target");
      }
    }
    // Infinity lies outside every disk; its image must land inside the target.
    BoundaryPoint far = g.apply(BoundaryPoint::infinity());
    if (far.is_infinite() ||
        !(std::abs(far.value() - d.target.center) < d.target.radius - tol::kCoincidence)) {
      invalid("ping-pong: generator " + std::to_string(i) +
              " does not send the exterior of its source disk into its target disk");
    }
  }
  checks.push_back("ping-pong: each generator maps the exterior of its source disk into its target disk");
}

// Boundary components of the quotient, traced through the free intervals of
// the real line between consecutive disks.
int count_boundary_components(const SurfaceSpec& s, const std::vector<DiskPair>& disks) {
  struct Slot {
    SchottkyDisk disk;
    unsigned generator;
    bool source;
  };
  std::vector<Slot> slots;
  for (unsigned i = 0; i < s.rank; ++i) {
    slots.push_back({disks[i].source, i, true});
    slots.push_back({disks[i].target, i, false});
  }
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.disk.center < b.disk.center; });
  const std::size_t n = slots.size();

  // Endpoint 2k is the left end of slot k, 2k + 1 its right end. Interval j
  // runs from the right end of slot j to the left end of slot j + 1.
  auto value_of = [&](std::size_t e) {
    const SchottkyDisk& d = slots[e / 2].disk;
    return e % 2 == 0 ? d.center - d.radius : d.center + d.radius;
  };
  auto interval_of = [&](std::size_t e) { return e % 2 == 1 ? e / 2 : (e / 2 + n - 1) % n; };
  auto other_end = [&](std::size_t e) {
    std::size_t j = interval_of(e);
    return e % 2 == 1 ? 2 * ((j + 1) % n) : 2 * j + 1;
  };
  auto partner = [&](std::size_t e) {
    const Slot& slot = slots[e / 2];
    Isometry map = slot.source ? s.generators[slot.generator] : s.generators[slot.generator].inverse();
    double img = real_image(map, value_of(e));
    std::size_t best = 0;
    double best_off = INFINITY;
    for (std::size_t k = 0; k < n; ++k) {
      if (slots[k].generator != slot.generator || slots[k].source == slot.source) continue;
      for (std::size_t side : {2 * k, 2 * k + 1}) {
        double off = std::abs(value_of(side) - img);
        if (off < best_off) {
          best_off = off;
          best = side;
        }
      }
    }
    return best;
  };

  std::vector<bool> seen(n, false);
  int components = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (seen[j]) continue;
    ++components;
    std::size_t start = 2 * j + 1;
    std::size_t e = start;
    for (std::size_t guard = 0; guard <= 2 * n; ++guard) {
      seen[interval_of(e)] = true;
      e = partner(other_end(e));
      if (e == start) break;
    }
  }
  return components;
}

}  // namespace

Isometry hyperbolic_generator(double repelling, double attracting, double length) {
  if (!(length > 0.0)) invalid("translation length must be positive");
  if (repelling == attracting) invalid("fixed points must differ");
  double k = std::exp(length / 2.0);
  // C maps 0 -> repelling and infinity -> attracting.
  Isometry c = attracting > repelling ? Isometry(attracting, repelling, 1.0, 1.0)
                                      : Isometry(attracting, -repelling, 1.0, -1.0);
  return c * Isometry(k, 0.0, 0.0, 1.0 / k) * c.inverse();
}

DiskPair isometric_disks(const Isometry& g) {
  if (g.c() == 0.0) invalid("isometric circles need a generator that moves infinity");
  double r = 1.0 / std::abs(g.c());
  return DiskPair{{-g.d() / g.c(), r}, {g.a() / g.c(), r}};
}

std::vector<DiskPair> effective_disks(const SurfaceSpec& s) {
  if (s.schottky_disks) return *s.schottky_disks;
  std::vector<DiskPair> out;
  for (const Isometry& g : s.generators) out.push_back(isometric_disks(g));
  return out;
}

ValidationReport validate(const SurfaceSpec& s, int radius) {
  ValidationReport report;
  report.label = s.label;
  report.rank = s.rank;
  if (s.rank < 2) invalid("rank must be at least 2");
  if (s.generators.size() != s.rank) {
    invalid("expected " + std::to_string(s.rank) + " generators, got " +
            std::to_string(s.generators.size()));
  }
  for (unsigned i = 0; i < s.rank; ++i) {
    IsometryType t = classify(s.generators[i]);
    if (t != IsometryType::Hyperbolic) {
      invalid("NotHyperbolic: generator " + std::to_string(i) + " is " + to_string(t));
    }
  }
  report.checks.push_back("all generators hyperbolic");

  std::vector<DiskPair> disks = effective_disks(s);
  if (disks.size() != s.rank) invalid("need one disk pair per generator");
  check_ping_pong(s, disks, report.checks);

  report.boundary_components = count_boundary_components(s, disks);
  report.genus = (1 + static_cast<int>(s.rank) - report.boundary_components) / 2;
  if (report.genus == 0 && report.boundary_components == 3) {
    report.topology = "pants";
  } else if (report.genus == 1 && report.boundary_components == 1) {
    report.topology = "holed-torus";
  } else {
    report.topology = "genus " + std::to_string(report.genus) + ", " +
                      std::to_string(report.boundary_components) + " boundary components";
  }

  report.crossing_pattern.assign(s.rank, std::vector<int>(s.rank, 0));
  for (unsigned i = 0; i < s.rank; ++i) {
    CyclicWord gi = canonical_class(reduce(std::vector<Letter>{Letter(i, 1)}));
    for (unsigned j = 0; j < s.rank; ++j) {
      CyclicWord gj = canonical_class(reduce(std::vector<Letter>{Letter(j, 1)}));
      report.crossing_pattern[i][j] =
          i == j ? self_intersection_number(s, gi, radius) : intersection_number(s, gi, gj, radius);
    }
  }
  return report;
}

Isometry word_to_matrix(const SurfaceSpec& s, const Word& w) {
  Isometry m = Isometry::identity();
  for (Letter l : w.letters()) {
    if (l.generator() >= s.generators.size()) {
      throw Error(ErrorKind::ParseError, "letter '" + format(reduce(std::vector<Letter>{l})) +
                                             "' exceeds the surface rank " + std::to_string(s.rank));
    }
    const Isometry& g = s.generators[l.generator()];
    m = m * (l.sign() > 0 ? g : g.inverse());
  }
  return m;
}

std::vector<std::string> builtin_names() { return {"pants", "holed-torus"}; }

SurfaceSpec builtin(std::string_view name, double scale) {
  SurfaceSpec s;
  if (name == "pants") {
    s = from_data(pants_data(), "pants", scale);
  } else if (name == "holed-torus") {
    s = from_data(holed_torus_data(), "holed-torus", scale);
  } else {
    throw Error(ErrorKind::UnknownSurface, std::string(name));
  }
  if (scale != 1.0) {
    std::ostringstream os;
    os << s.label << "@" << scale;
    s.label = os.str();
  }
  validate(s);
  return s;
}

SurfaceSpec parse_surface_config(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("surface config: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "surface config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "rank" && key != "generators" && key != "disks" && key != "label") {
      throw Error(ErrorKind::ParseError, "surface config: unknown field \"" + key + "\"");
    }
  }
  SurfaceSpec s;
  try {
    s.rank = doc.at("rank").get<unsigned>();
    s.label = doc.value("label", std::string("custom"));
    for (const json& g : doc.at("generators")) {
      auto e = g.get<std::vector<double>>();
      if (e.size() != 4) throw Error(ErrorKind::ParseError, "generator needs 4 entries");
      try {
        s.generators.emplace_back(e[0], e[1], e[2], e[3]);
      } catch (const std::invalid_argument&) {
        invalid("generator with non-positive determinant");
      }
    }
    if (doc.contains("disks")) {
      std::vector<DiskPair> disks;
      for (const json& d : doc.at("disks")) {
        for (const auto& [key, _] : d.items()) {
          if (key != "source" && key != "target") {
            throw Error(ErrorKind::ParseError, "surface config: unknown disk field \"" + key + "\"");
          }
        }
        auto src = d.at("source").get<std::vector<double>>();
        auto dst = d.at("target").get<std::vector<double>>();
        if (src.size() != 2 || dst.size() != 2) {
          throw Error(ErrorKind::ParseError, "disk needs [center, radius]");
        }
        disks.push_back({{src[0], src[1]}, {dst[0], dst[1]}});
      }
      s.schottky_disks = std::move(disks);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("surface config: ") + e.what());
  }
  validate(s);
  return s;
}

SurfaceSpec load_surface_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_surface_config(buffer.str());
}

SurfaceSpec resolve_surface(const std::string& name_or_path, double scale) {
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin(name_or_path, scale);
  }
  // A bare name that is not a file is a misspelled built-in, not a missing config.
  if (name_or_path.find_first_of("/.") == std::string::npos && !std::filesystem::exists(name_or_path)) {
    throw Error(ErrorKind::UnknownSurface, "unknown surface '" + name_or_path + "'");
  }
  return load_surface_config(name_or_path);
}

}  // namespace geobracket
