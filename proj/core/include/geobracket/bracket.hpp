#ifndef GEOBRACKET_BRACKET_HPP
#define GEOBRACKET_BRACKET_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "geobracket/engine.hpp"
#include "geobracket/word.hpp"

namespace geobracket {

using Coefficient = boost::multiprecision::cpp_int;

/// Finite integer combination of conjugacy classes. Zero coefficients are
/// never stored; iteration follows the shortlex class order.
class BracketResult {
 public:
  using Terms = std::map<CyclicWord, Coefficient>;

  void add(const CyclicWord& cls, const Coefficient& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BracketResult negated() const;
  BracketResult& operator+=(const BracketResult& other);
  BracketResult& operator*=(const Coefficient& factor);

  bool operator==(const BracketResult&) const = default;

 private:
  Terms terms_;
};

/// Goldman bracket [x, y]: the signed sum of loop-product classes over all
/// crossings of the two geodesics. [x, x] is zero without consulting the
/// engine. A power y = root^k contributes each crossing with weight k.
BracketResult bracket(const Engine& engine, const CyclicWord& x, const CyclicWord& y);
BracketResult bracket(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y, int radius);

/// Bilinear extension to formal sums.
BracketResult bracket(const Engine& engine, const BracketResult& lhs, const BracketResult& rhs);

/// [x, x^n] for primitive x, built from the self-crossings of x: every
/// strand crossing h contributes n * sign * <x h^n>. Throws NonPrimitive.
BracketResult bracket_power(const Engine& engine, const CyclicWord& x, int n);

/// [x, x-bar] for primitive x: every strand crossing h contributes
/// -sign * <x h^-1>. Throws NonPrimitive.
BracketResult bracket_bar(const Engine& engine, const CyclicWord& x);

struct SimplicityMode {
  enum class Kind { Power, Bar };
  Kind kind = Kind::Bar;
  int n = 2;

  static SimplicityMode bar() { return {Kind::Bar, -1}; }
  static SimplicityMode power(int n) { return {Kind::Power, n}; }
};

/// Whether the selected bracket vanishes. The verdict is cross-checked against
/// the self-intersection number; disagreement raises ConsistencyError.
bool is_simple(const Engine& engine, const CyclicWord& x, SimplicityMode mode);

using CrossingPair = std::pair<Crossing, Crossing>;

/// Greedy matching (ascending t) of crossings of [x, y] with equal term class
/// and opposite sign.
std::vector<CrossingPair> canceling_pairs(const Engine& engine, const CyclicWord& x,
                                          const CyclicWord& y);
std::vector<CrossingPair> canceling_pairs(const std::vector<Crossing>& crossings);

/// Sum of absolute coefficients.
Coefficient term_count(const BracketResult& r);

/// {"word": coefficient, ...} in class order. Coefficients beyond 64 bits are
/// written as decimal strings.
nlohmann::ordered_json to_json(const BracketResult& r);
BracketResult bracket_from_json(const nlohmann::json& j);

std::string to_string(const BracketResult& r);

}  // namespace geobracket

#endif  // GEOBRACKET_BRACKET_HPP
