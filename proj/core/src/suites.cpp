#include "geobracket/suites.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace geobracket {

namespace {

void absorb_labeled(VerificationReport& into, VerificationReport part, const std::string& label) {
  for (std::string& f : part.failures) f = label + ": " + f;
  for (std::string& n : part.notes) n = label + ": " + n;
  into.absorb(part);
}

std::vector<SurfaceSpec> surfaces_of(const SuiteOptions& o) {
  if (!o.surfaces.empty()) return o.surfaces;
  std::vector<SurfaceSpec> out;
  for (const std::string& name : builtin_names()) out.push_back(builtin(name));
  return out;
}

template <typename Body>
VerificationReport per_surface(const char* name, const SuiteOptions& o, Body body) {
  VerificationReport report;
  report.name = name;
  for (const SurfaceSpec& s : surfaces_of(o)) {
    VerificationReport part;
    Engine engine(s, o.radius);
    body(engine, primitive_corpus(s.rank, o.max_len), part);
    absorb_labeled(report, std::move(part), s.label);
  }
  return report;
}

VerificationReport angles(const SuiteOptions& o) {
  return per_surface("angles", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                      VerificationReport& part) {
    for (const CyclicWord& x : corpus) {
      CyclicWord bar = invert(x);
      part.absorb(check_forward_angle_congruence(e, x, bar, o.limits));
      part.absorb(check_smaller_angle_exists(e, x, bar, o.limits));
      for (int n : {-1, 2, 3}) part.absorb(check_minimal_angle_unmatched(e, x, n, o.limits));
      for (const CyclicWord& y : corpus) {
        if (!(x < y)) continue;
        part.absorb(check_forward_angle_congruence(e, x, y, o.limits));
        part.absorb(check_smaller_angle_exists(e, x, y, o.limits));
      }
    }
  });
}

VerificationReport reflections(const SuiteOptions& o) {
  VerificationReport report = per_surface(
      "reflections", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus, VerificationReport& part) {
        std::map<std::string, int> configurations;
        auto run = [&](const CyclicWord& x, const CyclicWord& y) {
          for (const CrossingPair& pair : canceling_pairs(e, x, y)) {
            VerificationReport r = check_reflection_symmetry(e, pair, o.limits);
            for (const std::string& n : r.notes) ++configurations[n];
            r.notes.clear();
            for (std::string& f : r.failures) f = "[" + format(x) + ", " + format(y) + "] " + f;
            part.absorb(r);
          }
        };
        for (const CyclicWord& x : corpus) {
          run(x, invert(x));
          for (const CyclicWord& y : corpus) {
            if (x < y) run(x, y);
          }
        }
        for (const auto& [config, count] : configurations) {
          part.notes.push_back(config + " (" + std::to_string(count) + ")");
        }
      });
  return report;
}

VerificationReport oracle(const SuiteOptions& o) {
  return per_surface("oracle", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                      VerificationReport& part) {
    for (const CyclicWord& x : corpus) {
      for (const CyclicWord& y : corpus) {
        ++part.instances;
        int expected = linking_oracle_count(e, x, y);
        int got = static_cast<int>(e.crossings(x, y).size());
        if (expected != got) {
          part.failures.push_back("(" + format(x) + ", " + format(y) + "): oracle " + std::to_string(expected) +
                                  ", engine " + std::to_string(got));
        }
      }
    }
  });
}

VerificationReport stability(const SuiteOptions& o) {
  return per_surface("stability", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                         VerificationReport& part) {
    Engine outer(e.surface(), e.radius() + 2);
    for (const CyclicWord& x : corpus) {
      for (const CyclicWord& y : corpus) part.absorb(radius_stability(e, outer, x, y));
    }
  });
}

VerificationReport midpoints(const SuiteOptions& o) {
  VerificationReport report = check_product_axis(o.seed, o.trials, o.limits);
  report.name = "midpoints";
  report.absorb(per_surface("midpoints", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                                VerificationReport& part) {
    for (const CyclicWord& x : corpus) {
      for (const CyclicWord& y : corpus) part.absorb(check_term_midpoints(e, x, y, o.limits));
    }
  }));
  return report;
}

VerificationReport jacobi(const SuiteOptions& o) {
  return per_surface("jacobi", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                      VerificationReport& part) {
    for (const CyclicWord& x : corpus) {
      for (const CyclicWord& y : corpus) {
        if (!(x < y)) continue;
        ++part.instances;
        if (bracket(e, x, y) != bracket(e, y, x).negated()) {
          part.failures.push_back("antisymmetry fails for " + format(x) + ", " + format(y));
        }
      }
    }
    std::vector<CyclicWord> shorts = primitive_corpus(e.surface().rank, std::min(o.max_len, 3));
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, shorts.size() - 1);
    for (int i = 0; i < 20; ++i) {
      const CyclicWord& x = shorts[pick(rng)];
      const CyclicWord& y = shorts[pick(rng)];
      const CyclicWord& z = shorts[pick(rng)];
      ++part.instances;
      BracketResult j = jacobiator(e, x, y, z);
      if (!j.empty()) {
        part.failures.push_back("Jacobi fails for " + format(x) + ", " + format(y) + ", " + format(z) + ": " +
                                to_string(j));
      }
    }
  });
}

VerificationReport theorems(const SuiteOptions& o) {
  return per_surface("theorems", o, [&](const Engine& e, const std::vector<CyclicWord>& corpus,
                                        VerificationReport& part) {
    for (const CyclicWord& x : corpus) {
      ++part.instances;
      SweepRow row = sweep_row(e, x);
      std::string label = format(x) + " (SL " + std::to_string(row.self_intersection) + ")";
      if (!row.bar_criterion_holds()) part.failures.push_back(label + ": [x, x-bar] disagrees with SL");
      if (!row.power_criterion_holds()) part.failures.push_back(label + ": [x, x^2] or [x, x^3] vanishes");
      if (!row.counts_match()) {
        part.notes.push_back(label + ": term counts " + row.bar_terms.str() + " and " + row.square_terms.str());
      }
    }
  });
}

}  // namespace

SweepRow sweep_row(const Engine& engine, const CyclicWord& x) {
  SweepRow row{x, 0, 0, 0, false};
  row.self_intersection = engine.self_intersection_number(x);
  row.bar_terms = term_count(bracket_bar(engine, x));
  row.square_terms = term_count(bracket_power(engine, x, 2));
  row.cube_vanishes = bracket_power(engine, x, 3).empty();
  return row;
}

std::vector<std::string> suite_names() {
  return {"beardon", "midpoints", "rotations", "angles", "reflections", "oracle", "stability", "jacobi", "theorems"};
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  VerificationReport r;
  if (name == "beardon") {
    r = check_length_formula(options.seed, options.trials, options.limits);
  } else if (name == "midpoints") {
    r = midpoints(options);
  } else if (name == "rotations") {
    r = check_rotation_decomposition(options.seed, options.trials, options.limits);
  } else if (name == "angles") {
    r = angles(options);
  } else if (name == "reflections") {
    r = reflections(options);
  } else if (name == "oracle") {
    r = oracle(options);
  } else if (name == "stability") {
    r = stability(options);
  } else if (name == "jacobi") {
    r = jacobi(options);
  } else if (name == "theorems") {
    r = theorems(options);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  r.name = std::string(name);
  return r;
}

}  // namespace geobracket
