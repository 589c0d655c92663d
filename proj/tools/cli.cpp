#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "geobracket/bracket.hpp"
#include "geobracket/engine.hpp"
#include "geobracket/suites.hpp"
#include "geobracket/surface.hpp"
#include "geobracket/verify.hpp"
#include "svg.hpp"

namespace geobracket::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Tsv };

struct Settings {
  std::string surface = "pants";
  bool surface_given = false;
  int radius = 8;
  std::string format = "text";
  std::uint64_t seed = 1;
  double scale = 1.0;
  Tolerances limits;
};

struct Context {
  const Settings& settings;
  Format format;
  std::ostringstream& out;

  std::string label;
  std::optional<SurfaceSpec> surface;
  std::optional<Engine> engine;
  std::vector<SurfaceSpec> builtins;

  void header() {
    switch (format) {
      case Format::Text: out << "surface: " << label << "  radius: " << settings.radius << '\n'; break;
      case Format::Tsv: out << "# surface\t" << label << "\tradius\t" << settings.radius << '\n'; break;
      case Format::Json: break;
    }
  }

  json document() const {
    json j;
    j["surface"] = label;
    j["radius"] = settings.radius;
    return j;
  }

  void emit(const json& j) { out << j.dump(2) << '\n'; }
};

std::string real(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

CyclicWord class_of(const std::string& text) { return canonical_class(parse_word(text)); }

CyclicWord primitive_class_of(const std::string& text) {
  CyclicWord c = class_of(text);
  PowerDecomposition p = is_power(c);
  if (p.exponent != 1) {
    throw Error(ErrorKind::NonPrimitive, format(c) + " is the power " + std::to_string(p.exponent) + " of " +
                                             format(p.root));
  }
  return c;
}

// Term counts as JSON numbers, falling back to decimal strings beyond 64 bits.
json count_json(const Coefficient& c) {
  if (c <= std::numeric_limits<long long>::max()) return c.convert_to<long long>();
  return c.str();
}

json crossing_json(const Crossing& cr) {
  json j;
  j["t"] = cr.t;
  j["sign"] = cr.sign;
  j["angle"] = cr.angle;
  j["other"] = format(cr.other);
  j["term"] = format(loop_product_class(cr));
  return j;
}

void report_crossings(Context& ctx, const std::string& key, const std::vector<std::string>& classes, int count,
                      const std::vector<Crossing>& crossings) {
  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["classes"] = classes;
    j[key] = count;
    json list = json::array();
    for (const Crossing& cr : crossings) list.push_back(crossing_json(cr));
    j["crossings"] = std::move(list);
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << key << '\t' << count << '\n';
    ctx.out << "t\tsign\tangle\tother\tterm\n";
    for (const Crossing& cr : crossings) {
      ctx.out << real(cr.t) << '\t' << cr.sign << '\t' << real(cr.angle) << '\t' << format(cr.other) << '\t'
              << format(loop_product_class(cr)) << '\n';
    }
  } else {
    ctx.out << count << '\n';
  }
}

int cmd_length(Context& ctx, const std::string& word) {
  CyclicWord c = class_of(word);
  double l = ctx.engine->geodesic_of(c).length;
  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["class"] = format(c);
    j["length"] = l;
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << "class\tlength\n" << format(c) << '\t' << real(l) << '\n';
  } else {
    ctx.out << real(l) << '\n';
  }
  return kOk;
}

int cmd_selfint(Context& ctx, const std::string& word) {
  CyclicWord c = primitive_class_of(word);
  int sl = ctx.engine->self_intersection_number(c);
  report_crossings(ctx, "self_intersection", {format(c)}, sl, ctx.engine->crossings(c, c));
  return kOk;
}

int cmd_intersect(Context& ctx, const std::string& w1, const std::string& w2) {
  CyclicWord x = class_of(w1), y = class_of(w2);
  int count = ctx.engine->intersection_number(x, y);
  report_crossings(ctx, "intersection", {format(x), format(y)}, count, ctx.engine->crossings(x, y));
  return kOk;
}

int cmd_bracket(Context& ctx, const std::vector<std::string>& words, std::optional<int> power, bool bar) {
  BracketResult r;
  std::string what;
  if (bar || power) {
    if (words.size() != 1) throw Error(ErrorKind::ParseError, "--power and --bar take exactly one word");
    if (bar && power) throw Error(ErrorKind::ParseError, "--power and --bar are exclusive");
    CyclicWord x = primitive_class_of(words[0]);
    if (bar) {
      r = bracket_bar(*ctx.engine, x);
      what = "[" + format(x) + ", " + format(invert(x)) + "]";
    } else {
      r = bracket_power(*ctx.engine, x, *power);
      what = "[" + format(x) + ", (" + format(x) + ")^" + std::to_string(*power) + "]";
    }
  } else {
    if (words.size() != 2) throw Error(ErrorKind::ParseError, "bracket needs two words");
    CyclicWord x = class_of(words[0]), y = class_of(words[1]);
    r = bracket(*ctx.engine, x, y);
    what = "[" + format(x) + ", " + format(y) + "]";
  }
  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["bracket"] = what;
    j["term_count"] = count_json(term_count(r));
    j["terms"] = to_json(r);
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << "class\tcoefficient\n";
    for (const auto& [cls, coefficient] : r.terms()) ctx.out << format(cls) << '\t' << coefficient << '\n';
  } else {
    ctx.out << to_json(r).dump() << '\n';
  }
  return kOk;
}

int cmd_simple(Context& ctx, const std::string& word, const std::string& mode, int n) {
  if (n == 0 || n == 1) throw Error(ErrorKind::ParseError, "--n must differ from 0 and 1");
  CyclicWord x = primitive_class_of(word);
  const Engine& e = *ctx.engine;
  int sl = e.self_intersection_number(x);
  Coefficient bar_terms = term_count(bracket_bar(e, x));
  Coefficient power_terms = term_count(bracket_power(e, x, n));
  bool by_bar = is_simple(e, x, SimplicityMode::bar());
  bool by_power = is_simple(e, x, SimplicityMode::power(n));
  bool verdict = mode == "bar" ? by_bar : by_power;
  bool agree = by_bar == by_power;

  ctx.header();
  std::string name = verdict ? "simple" : "non-simple";
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["class"] = format(x);
    j["verdict"] = name;
    j["mode"] = mode;
    j["n"] = n;
    j["self_intersection"] = sl;
    j["bar_terms"] = count_json(bar_terms);
    j["power_terms"] = count_json(power_terms);
    j["modes_agree"] = agree;
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << "class\tverdict\tself_intersection\tbar_terms\tpower_terms\tmodes_agree\n";
    ctx.out << format(x) << '\t' << name << '\t' << sl << '\t' << bar_terms << '\t' << power_terms << '\t'
            << (agree ? "yes" : "no") << '\n';
  } else {
    ctx.out << name << '\n';
    ctx.out << "  self-intersection " << sl << ", |[x, x-bar]| = " << bar_terms << ", |[x, x^" << n
            << "]| = " << power_terms << '\n';
    if (!agree) ctx.out << "  bar and power modes disagree\n";
  }
  return agree ? kOk : kVerificationFailed;
}

int cmd_verify(Context& ctx, const std::string& suite, int trials, int max_len) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  SuiteOptions options;
  options.surfaces = ctx.surface ? std::vector<SurfaceSpec>{*ctx.surface} : ctx.builtins;
  options.radius = ctx.settings.radius;
  options.trials = trials;
  options.max_len = max_len;
  options.seed = ctx.settings.seed;
  options.limits = ctx.settings.limits;

  std::vector<VerificationReport> reports;
  for (const std::string& n : names) reports.push_back(run_suite(n, options));
  bool passed = true;
  for (const VerificationReport& r : reports) passed = passed && r.passed();

  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["passed"] = passed;
    json list = json::array();
    for (const VerificationReport& r : reports) list.push_back(to_json(r));
    j["reports"] = std::move(list);
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << "suite\tpassed\tinstances\tfailures\tmax_residual\n";
    for (const VerificationReport& r : reports) {
      ctx.out << r.name << '\t' << (r.passed() ? "yes" : "no") << '\t' << r.instances << '\t' << r.failures.size()
              << '\t' << real(r.max_residual, 3) << '\n';
    }
  } else {
    constexpr std::size_t kShown = 20;
    for (const VerificationReport& r : reports) {
      ctx.out << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.instances
              << " instances, max residual " << real(r.max_residual, 3) << ")\n";
      for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) ctx.out << "  failure: " << r.failures[i] << '\n';
      if (r.failures.size() > kShown) ctx.out << "  ... " << r.failures.size() - kShown << " more failures\n";
      for (std::size_t i = 0; i < r.notes.size() && i < kShown; ++i) ctx.out << "  note: " << r.notes[i] << '\n';
      if (r.notes.size() > kShown) ctx.out << "  ... " << r.notes.size() - kShown << " more notes\n";
    }
  }
  return passed ? kOk : kVerificationFailed;
}

int cmd_sweep(Context& ctx, int max_len) {
  const Engine& e = *ctx.engine;
  int hard = 0, soft = 0;
  std::vector<std::pair<SweepRow, std::string>> rows;
  for (const CyclicWord& x : primitive_corpus(e.surface().rank, max_len)) {
    SweepRow row = sweep_row(e, x);
    std::vector<std::string> flags;
    if (!row.bar_criterion_holds()) flags.push_back("hard:bar");
    if (!row.power_criterion_holds()) flags.push_back("hard:power");
    if (!row.counts_match()) flags.push_back("soft:counts");
    std::string joined;
    for (const std::string& f : flags) {
      if (f.starts_with("hard")) ++hard;
      else ++soft;
      joined += (joined.empty() ? "" : ",") + f;
    }
    rows.emplace_back(std::move(row), joined);
  }

  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["max_len"] = max_len;
    json list = json::array();
    for (const auto& [row, flags] : rows) {
      json r;
      r["class"] = format(row.cls);
      r["self_intersection"] = row.self_intersection;
      r["bar_terms"] = count_json(row.bar_terms);
      r["square_terms"] = count_json(row.square_terms);
      r["cube_vanishes"] = row.cube_vanishes;
      r["verdict"] = row.simple() ? "simple" : "non-simple";
      r["flags"] = flags;
      list.push_back(std::move(r));
    }
    j["rows"] = std::move(list);
    j["hard_failures"] = hard;
    j["soft_violations"] = soft;
    ctx.emit(j);
  } else {
    ctx.out << "class\tsl\tbar_terms\tsquare_terms\tcube_zero\tverdict\tflags\n";
    for (const auto& [row, flags] : rows) {
      ctx.out << format(row.cls) << '\t' << row.self_intersection << '\t' << row.bar_terms << '\t' << row.square_terms
              << '\t' << (row.cube_vanishes ? "yes" : "no") << '\t' << (row.simple() ? "simple" : "non-simple")
              << '\t' << flags << '\n';
    }
    ctx.out << "# rows " << rows.size() << " hard " << hard << " soft " << soft << '\n';
  }
  return hard == 0 ? kOk : kVerificationFailed;
}

// The band model: z -> log z sends the upper half-plane onto the strip
// 0 < Im < pi and dilations about 0 onto horizontal shifts.
PlanePoint band_point(const PlanePoint& p) { return PlanePoint(std::log(std::abs(p.z())), std::arg(p.z())); }

std::vector<std::pair<double, double>> band_segment(const PlanePoint& p, const PlanePoint& q) {
  constexpr int kSamples = 48;
  std::vector<std::pair<double, double>> out;
  double dx = q.x() - p.x();
  bool vertical = std::abs(dx) <= 1e-12 * std::max(std::abs(p.z()), std::abs(q.z()));
  double c = 0.0, r = 0.0, a0 = 0.0, a1 = 0.0;
  if (!vertical) {
    c = (std::norm(q.z()) - std::norm(p.z())) / (2 * dx);
    r = std::abs(p.z() - c);
    a0 = std::arg(p.z() - c);
    a1 = std::arg(q.z() - c);
  }
  for (int i = 0; i <= kSamples; ++i) {
    double s = static_cast<double>(i) / kSamples;
    std::complex<double> z = vertical ? std::complex<double>(p.x(), p.y() + s * (q.y() - p.y()))
                                      : c + std::polar(r, a0 + s * (a1 - a0));
    out.emplace_back(std::log(std::abs(z)), std::arg(z));
  }
  return out;
}

void draw_crossings(SvgCanvas& canvas, const ClosedGeodesic& g, const std::vector<Crossing>& crossings) {
  canvas.line(g.ax, "axis");
  for (const Crossing& cr : crossings) {
    canvas.line(cr.other_ax, "lift");
    canvas.point(cr.point, "crossing");
  }
}

int cmd_draw(Context& ctx, const std::vector<std::string>& words, const std::string& path) {
  const Engine& e = *ctx.engine;
  SvgCanvas canvas;
  canvas.caption(ctx.label + ", radius " + std::to_string(ctx.settings.radius));
  std::string kind;
  if (words.size() == 1) {
    CyclicWord x = class_of(words[0]);
    std::vector<Crossing> crossings = e.crossings(x, x);
    draw_crossings(canvas, e.geodesic_of(x), crossings);
    canvas.caption("axis of " + format(x) + " with " + std::to_string(crossings.size()) + " self-crossings");
    kind = "axis";
  } else if (words.size() == 2) {
    CyclicWord x = class_of(words[0]), y = class_of(words[1]);
    std::vector<CrossingPair> pairs = canceling_pairs(e, x, y);
    if (pairs.empty()) {
      std::vector<Crossing> crossings = e.crossings(x, y);
      draw_crossings(canvas, e.geodesic_of(x), crossings);
      canvas.caption("axis of " + format(x) + " with " + std::to_string(crossings.size()) + " lifts of " +
                     format(y) + "; no canceling pair");
      kind = "crossings";
    } else {
      const CrossingPair& pair = pairs.front();
      SymmetryPicture pic = symmetry_picture(e, pair);
      double left = 0.0, right = 0.0;
      for (const auto* points : {&pic.p_zigzag, &pic.q_zigzag}) {
        for (const PlanePoint& p : *points) {
          left = std::min(left, std::log(std::abs(p.z())));
          right = std::max(right, std::log(std::abs(p.z())));
        }
      }
      constexpr double kPi = 3.14159265358979323846;
      canvas.polyline({{left, kPi}, {right, kPi}}, "band-edge");
      canvas.polyline({{left, kPi / 2}, {right, kPi / 2}}, "term-axis");
      canvas.polyline({{0.0, 0.0}, {0.0, kPi}}, "mirror", "U");
      canvas.polyline({{-pic.half_length, 0.0}, {-pic.half_length, kPi}}, "mirror", "V");
      for (const auto& [points, cls] : {std::pair{&pic.p_zigzag, "zigzag-p"}, std::pair{&pic.q_zigzag, "zigzag-q"}}) {
        for (std::size_t i = 0; i + 1 < points->size(); ++i) {
          canvas.polyline(band_segment((*points)[i], (*points)[i + 1]), cls);
        }
        for (const PlanePoint& p : *points) canvas.point(band_point(p), "vertex");
      }
      canvas.caption("canceling pair of [" + format(x) + ", " + format(y) + "] with term " +
                     format(loop_product_class(pair.first)));
      canvas.caption("band model (log|z|, arg z): term axis horizontal, mirrors U and V vertical");
      kind = "canceling-pair";
    }
  } else {
    throw Error(ErrorKind::ParseError, "draw takes one or two words");
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  file << canvas.render();
  file.close();
  if (!file) throw Error(ErrorKind::IoError, "cannot write " + path);

  ctx.header();
  if (ctx.format == Format::Json) {
    json j = ctx.document();
    j["figure"] = kind;
    j["path"] = path;
    ctx.emit(j);
  } else if (ctx.format == Format::Tsv) {
    ctx.out << "figure\tpath\n" << kind << '\t' << path << '\n';
  } else {
    ctx.out << "wrote " << kind << " figure to " << path << '\n';
  }
  return kOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSurface:
    case ErrorKind::InvalidSurface: return kParseError;
    case ErrorKind::IdentityClass: return kIdentityClass;
    case ErrorKind::NonPrimitive: return kNonPrimitive;
    case ErrorKind::IoError: return kIoError;
    default: return kVerificationFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Goldman bracket, geodesic lengths and intersection numbers on Schottky surfaces", "geobracket"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--surface", s.surface, "Built-in surface (pants, holed-torus) or JSON config path");
  app.add_option("--radius,-L", s.radius, "Conjugator length bound for lift enumeration")
      ->check(CLI::Range(2, 14))
      ->capture_default_str();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--scale", s.scale, "Multiplier for built-in translation lengths")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-angle", s.limits.angle, "Forward angle tolerance")->capture_default_str();
  app.add_option("--tol-margin", s.limits.margin, "Strict angle comparison margin")->capture_default_str();
  app.add_option("--tol-vertex", s.limits.vertex, "Reflected vertex tolerance")->capture_default_str();
  app.add_option("--tol-spacing", s.limits.spacing, "Mirror spacing tolerance")->capture_default_str();
  app.add_option("--tol-identity", s.limits.identity, "Length and distance identity tolerance")
      ->capture_default_str();
  app.add_option("--tol-matrix", s.limits.matrix, "Projective matrix tolerance")->capture_default_str();

  std::function<int(Context&)> action;
  bool needs_engine = true;

  std::string word, word2;
  auto* length = app.add_subcommand("length", "Length of the closed geodesic of a class");
  length->add_option("word", word, "Word in a, b, A = a^-1, B = b^-1")->required();
  length->callback([&] { action = [&](Context& c) { return cmd_length(c, word); }; });

  auto* selfint = app.add_subcommand("selfint", "Self-intersection number of a primitive class");
  selfint->add_option("word", word)->required();
  selfint->callback([&] { action = [&](Context& c) { return cmd_selfint(c, word); }; });

  auto* intersect = app.add_subcommand("intersect", "Crossing count of two classes");
  intersect->add_option("first", word)->required();
  intersect->add_option("second", word2)->required();
  intersect->callback([&] { action = [&](Context& c) { return cmd_intersect(c, word, word2); }; });

  std::vector<std::string> words;
  std::optional<int> power;
  bool bar = false;
  auto* bracket_cmd = app.add_subcommand("bracket", "Goldman bracket as a term map");
  bracket_cmd->add_option("words", words)->required()->expected(1, 2);
  bracket_cmd->add_option("--power", power, "Compute [x, x^n]");
  bracket_cmd->add_flag("--bar", bar, "Compute [x, x-bar]");
  bracket_cmd->callback([&] { action = [&](Context& c) { return cmd_bracket(c, words, power, bar); }; });

  std::string mode = "bar";
  int n = 2;
  auto* simple = app.add_subcommand("simple", "Decide simplicity from a vanishing bracket");
  simple->add_option("word", word)->required();
  simple->add_option("--mode", mode)->check(CLI::IsMember({"bar", "power"}))->capture_default_str();
  simple->add_option("--n", n, "Exponent for power mode")->capture_default_str();
  simple->callback([&] { action = [&](Context& c) { return cmd_simple(c, word, mode, n); }; });

  std::string suite;
  int trials = 1000, max_len = 4;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--trials", trials, "Random trials for matrix identities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--max-len", max_len, "Longest class in the corpus")->check(CLI::Range(1, 7))->capture_default_str();
  verify->callback([&] {
    needs_engine = false;
    action = [&](Context& c) { return cmd_verify(c, suite, trials, max_len); };
  });

  int sweep_len = 5;
  auto* sweep = app.add_subcommand("sweep", "Simplicity criteria over all primitive classes");
  sweep->add_option("--max-len", sweep_len, "Longest class in the sweep")->check(CLI::Range(1, 7))->capture_default_str();
  sweep->callback([&] { action = [&](Context& c) { return cmd_sweep(c, sweep_len); }; });

  std::string path;
  auto* draw = app.add_subcommand("draw", "SVG of axes, or zigzags of a canceling pair");
  draw->add_option("words", words)->required()->expected(1, 2);
  draw->add_option("--out,-o", path, "SVG file to write")->required();
  draw->callback([&] { action = [&](Context& c) { return cmd_draw(c, words, path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "geobracket: " << e.what() << '\n';
    return kParseError;
  }
  s.surface_given = app.count("--surface") > 0;

  std::ostringstream buffer;
  Context ctx{s, s.format == "json" ? Format::Json : s.format == "tsv" ? Format::Tsv : Format::Text, buffer, {}, {}, {}, {}};
  try {
    if (needs_engine || s.surface_given) {
      ctx.surface = resolve_surface(s.surface, s.scale);
      ctx.label = ctx.surface->label;
      if (needs_engine) ctx.engine.emplace(*ctx.surface, s.radius);
    } else {
      std::string labels;
      for (const std::string& name : builtin_names()) {
        ctx.builtins.push_back(builtin(name, s.scale));
        labels += (labels.empty() ? "" : ", ") + ctx.builtins.back().label;
      }
      ctx.label = labels;
    }
    int code = action(ctx);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    out << buffer.str();
    err << "geobracket: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    out << buffer.str();
    err << "geobracket: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace geobracket::cli
