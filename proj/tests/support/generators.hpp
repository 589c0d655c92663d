#ifndef GEOBRACKET_TESTS_GENERATORS_HPP
#define GEOBRACKET_TESTS_GENERATORS_HPP

#include <cctype>
#include <cmath>
#include <random>
#include <string>

#include "geobracket/hyperbolic.hpp"
#include "geobracket/word.hpp"

namespace geobracket::testing {

/// Small hand-rolled generators for property tests. Every test seeds its own
/// engine so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  PlanePoint point() { return PlanePoint(uniform(-3, 3), std::exp(uniform(-1.5, 1.5))); }

  /// Reduced word of the given length over `rank` generators.
  Word word(int length, unsigned rank = 2) {
    std::string s;
    while (static_cast<int>(s.size()) < length) {
      char c = static_cast<char>((integer(0, 1) ? 'a' : 'A') + integer(0, static_cast<int>(rank) - 1));
      if (!s.empty() && s.back() != c && std::tolower(s.back()) == std::tolower(c)) continue;
      s.push_back(c);
    }
    return parse_word(s);
  }

  /// Cyclically reduced nonempty word with up to max_length letters.
  Word cyclic_word(int max_length, unsigned rank = 2) {
    for (;;) {
      Word w = word(integer(1, max_length), rank);
      if (w.size() == 1 || w[0] != w[w.size() - 1].inverse()) return w;
    }
  }

  /// Isometry with entries drawn from a box, conditioned on det > 0.
  Isometry isometry() {
    for (;;) {
      double a = uniform(-3, 3), b = uniform(-3, 3), c = uniform(-3, 3), d = uniform(-3, 3);
      if (a * d - b * c > 0.05) return Isometry(a, b, c, d);
    }
  }

  /// Hyperbolic element from fixed points in [-5, 5] and length in [0.2, 6].
  Isometry hyperbolic() {
    for (;;) {
      double p = uniform(-5, 5), q = uniform(-5, 5);
      if (std::abs(p - q) < 0.05) continue;
      double l = uniform(0.2, 6), k = std::exp(l / 2);
      // Conjugate diag(k, 1/k) by the map sending 0 to p and infinity to q.
      double a = q * k - p / k, b = p * q * (1 / k - k), c = k - 1 / k, d = q / k - p * k;
      return Isometry(a, b, c, d);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace geobracket::testing

#endif  // GEOBRACKET_TESTS_GENERATORS_HPP
