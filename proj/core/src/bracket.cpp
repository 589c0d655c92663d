#include "geobracket/bracket.hpp"

#include <limits>
#include <sstream>

#include "geobracket/error.hpp"

namespace geobracket {

namespace {

void require_primitive(const CyclicWord& x) {
  if (!is_primitive(x)) throw Error(ErrorKind::NonPrimitive, format(x) + " is a proper power");
}

}  // namespace

void BracketResult::add(const CyclicWord& cls, const Coefficient& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(cls, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

BracketResult BracketResult::negated() const {
  BracketResult out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

BracketResult& BracketResult::operator+=(const BracketResult& other) {
  for (const auto& [cls, c] : other.terms_) add(cls, c);
  return *this;
}

BracketResult& BracketResult::operator*=(const Coefficient& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= factor;
  return *this;
}

BracketResult bracket(const Engine& engine, const CyclicWord& x, const CyclicWord& y) {
  BracketResult out;
  if (x == y) return out;
  const int weight = is_power(y).exponent;
  for (const Crossing& cr : engine.crossings(x, y)) {
    out.add(loop_product_class(cr), Coefficient(weight * sign_at(cr)));
  }
  return out;
}

BracketResult bracket(const SurfaceSpec& s, const CyclicWord& x, const CyclicWord& y, int radius) {
  return bracket(Engine(s, radius), x, y);
}

BracketResult bracket(const Engine& engine, const BracketResult& lhs, const BracketResult& rhs) {
  BracketResult out;
  for (const auto& [x, cx] : lhs.terms()) {
    for (const auto& [y, cy] : rhs.terms()) {
      BracketResult term = bracket(engine, x, y);
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

BracketResult bracket_power(const Engine& engine, const CyclicWord& x, int n) {
  require_primitive(x);
  BracketResult out;
  if (n == 1 || n == 0) return out;
  const Word& rep = engine.geodesic_of(x).rep;
  for (const Crossing& cr : engine.crossings(x, x)) {
    // The x^n lift through the crossing is the same line; only its element changes.
    Word term = rep * power(cr.other, n);
    int direction = n > 0 ? 1 : -1;
    out.add(canonical_class(term), Coefficient((n < 0 ? -n : n) * direction * sign_at(cr)));
  }
  return out;
}

BracketResult bracket_bar(const Engine& engine, const CyclicWord& x) {
  require_primitive(x);
  BracketResult out;
  const Word& rep = engine.geodesic_of(x).rep;
  for (const Crossing& cr : engine.crossings(x, x)) {
    out.add(canonical_class(rep * invert(cr.other)), Coefficient(-sign_at(cr)));
  }
  return out;
}

bool is_simple(const Engine& engine, const CyclicWord& x, SimplicityMode mode) {
  require_primitive(x);
  BracketResult r = mode.kind == SimplicityMode::Kind::Bar ? bracket_bar(engine, x)
                                                           : bracket_power(engine, x, mode.n);
  int sl = engine.self_intersection_number(x);
  if (r.empty() != (sl == 0)) {
    std::ostringstream os;
    os << format(x) << ": bracket has " << term_count(r) << " terms but SL = " << sl;
    throw Error(ErrorKind::ConsistencyError, os.str());
  }
  return r.empty();
}

std::vector<CrossingPair> canceling_pairs(const std::vector<Crossing>& crossings) {
  std::vector<CyclicWord> classes;
  classes.reserve(crossings.size());
  for (const Crossing& cr : crossings) classes.push_back(loop_product_class(cr));

  std::vector<bool> used(crossings.size(), false);
  std::vector<CrossingPair> out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      if (used[j] || classes[j] != classes[i]) continue;
      if (crossings[i].sign * crossings[j].sign != -1) continue;
      used[i] = used[j] = true;
      out.emplace_back(crossings[i], crossings[j]);
      break;
    }
  }
  return out;
}

std::vector<CrossingPair> canceling_pairs(const Engine& engine, const CyclicWord& x,
                                          const CyclicWord& y) {
  if (x == y) return {};
  return canceling_pairs(engine.crossings(x, y));
}

Coefficient term_count(const BracketResult& r) {
  Coefficient total = 0;
  for (const auto& [_, c] : r.terms()) total += abs(c);
  return total;
}

nlohmann::ordered_json to_json(const BracketResult& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [cls, c] : r.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      out[format(cls)] = c.convert_to<long long>();
    } else {
      out[format(cls)] = c.str();
    }
  }
  return out;
}

BracketResult bracket_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "term map must be a JSON object");
  BracketResult out;
  for (const auto& [key, value] : j.items()) {
    Coefficient c;
    if (value.is_number_integer()) {
      c = value.get<long long>();
    } else if (value.is_string()) {
      try {
        c = Coefficient(value.get<std::string>());
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad coefficient for " + key);
      }
    } else {
      throw Error(ErrorKind::ParseError, "bad coefficient for " + key);
    }
    out.add(canonical_class(parse_word(key)), c);
  }
  return out;
}

std::string to_string(const BracketResult& r) { return to_json(r).dump(); }

}  // namespace geobracket
