#ifndef GEOBRACKET_SUITES_HPP
#define GEOBRACKET_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geobracket/verify.hpp"

namespace geobracket {

/// One row of the simplicity sweep.
struct SweepRow {
  CyclicWord cls;
  int self_intersection = 0;
  Coefficient bar_terms;
  Coefficient square_terms;
  bool cube_vanishes = false;

  bool simple() const noexcept { return self_intersection == 0; }
  /// [x, x-bar] vanishes exactly when x is simple.
  bool bar_criterion_holds() const { return (bar_terms == 0) == simple(); }
  /// A non-simple x has nonzero [x, x^2] and [x, x^3].
  bool power_criterion_holds() const { return simple() || (square_terms != 0 && !cube_vanishes); }
  /// Term counts 2 SL and 4 SL.
  bool counts_match() const { return bar_terms == 2 * self_intersection && square_terms == 4 * self_intersection; }
};

SweepRow sweep_row(const Engine& engine, const CyclicWord& x);

struct SuiteOptions {
  /// Defaults to all built-in surfaces when empty.
  std::vector<SurfaceSpec> surfaces;
  int radius = 8;
  int trials = 1000;
  /// Longest cyclic length of the class corpus.
  int max_len = 4;
  std::uint64_t seed = 1;
  Tolerances limits;
};

/// beardon, midpoints, rotations, angles, reflections, oracle, stability,
/// jacobi, theorems.
std::vector<std::string> suite_names();

/// Runs a named suite. Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace geobracket

#endif  // GEOBRACKET_SUITES_HPP
