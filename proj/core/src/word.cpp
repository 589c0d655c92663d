#include "geobracket/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "geobracket/error.hpp"

namespace geobracket {

namespace {

std::strong_ordering shortlex(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Cyclic reduction: w = u * core * u^-1 with core cyclically reduced.
// Returns the length of u.
std::size_t cyclic_prefix(std::span<const Letter> w) noexcept {
  std::size_t i = 0;
  std::size_t n = w.size();
  while (2 * i + 1 < n && w[i] == w[n - 1 - i].inverse()) ++i;
  return i;
}

// Offset of the least rotation.
std::size_t least_rotation(std::span<const Letter> s) {
  std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      Letter x = s[(r + k) % n];
      Letter y = s[(best + k) % n];
      if (x < y) {
        best = r;
        break;
      }
      if (y < x) break;
    }
  }
  return best;
}

}  // namespace

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
  return shortlex(letters_, other.letters_);
}

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& other) const noexcept {
  return shortlex(letters_, other.letters_);
}

Word CyclicWord::as_word() const { return reduce(letters_); }

Word reduce(std::span<const Letter> raw) {
  Word out;
  out.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> raw;
  raw.reserve(lhs.size() + rhs.size());
  raw.insert(raw.end(), lhs.letters_.begin(), lhs.letters_.end());
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return reduce(raw);
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? invert(w) : w;
  int count = n < 0 ? -n : n;
  std::vector<Letter> raw;
  raw.reserve(base.size() * static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) raw.insert(raw.end(), base.letters().begin(), base.letters().end());
  return reduce(raw);
}

CyclicWord canonical_class(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::IdentityClass, "the trivial word has no conjugacy class");
  std::span<const Letter> s = w.letters();
  std::size_t u = cyclic_prefix(s);
  std::span<const Letter> core = s.subspan(u, s.size() - 2 * u);
  std::size_t r = least_rotation(core);
  std::vector<Letter> rotated;
  rotated.reserve(core.size());
  for (std::size_t k = 0; k < core.size(); ++k) rotated.push_back(core[(r + k) % core.size()]);
  return CyclicWord(std::move(rotated));
}

CyclicWord invert(const CyclicWord& c) { return canonical_class(invert(c.as_word())); }

CyclicWord power(const CyclicWord& c, int n) { return canonical_class(power(c.as_word(), n)); }

PowerDecomposition is_power(const CyclicWord& c) {
  std::span<const Letter> s = c.letters();
  std::size_t n = s.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = s[i] == s[i - p];
    if (periodic) {
      return {canonical_class(reduce(s.first(p))), static_cast<int>(n / p)};
    }
  }
  return {c, 1};
}

bool commute(const Word& u, const Word& v) { return u * v == v * u; }

Word conjugator(const Word& target, const Word& source) {
  // w = (u p) * canonical * (u p)^-1 where u is the cyclic prefix and p the
  // part of the core rotated away.
  auto to_canonical = [](const Word& w) {
    std::span<const Letter> s = w.letters();
    std::size_t u = cyclic_prefix(s);
    std::span<const Letter> core = s.subspan(u, s.size() - 2 * u);
    std::size_t r = least_rotation(core);
    std::vector<Letter> raw(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(u));
    raw.insert(raw.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));
    return reduce(raw);
  };
  if (target.empty() || source.empty() || canonical_class(target) != canonical_class(source)) {
    throw Error(ErrorKind::ConsistencyError, format(target) + " and " + format(source) +
                                                 " are not conjugate");
  }
  Word c = to_canonical(target) * invert(to_canonical(source));
  if (c * source * invert(c) != target) {
    throw Error(ErrorKind::ConsistencyError, "conjugator construction failed");
  }
  return c;
}

std::vector<Word> conjugates_up_to(const Word& w, int radius, unsigned rank) {
  std::vector<Word> out;
  for (Conjugate& c : conjugates_with_conjugators(w, radius, rank)) out.push_back(std::move(c.element));
  return out;
}

std::vector<Conjugate> conjugates_with_conjugators(const Word& w, int radius, unsigned rank) {
  std::vector<Conjugate> out;
  std::unordered_set<Word> seen;

  // Breadth-first over reduced conjugators g, shortlex order.
  std::vector<Word> frontier{Word{}};
  for (int depth = 0; depth <= radius && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const Word& g : frontier) {
      Word h = g * w * invert(g);
      if (seen.insert(h).second) out.push_back(Conjugate{std::move(h), g});
      if (depth == radius) continue;
      for (unsigned code = 0; code < 2 * rank; ++code) {
        Letter l = Letter::from_code(static_cast<std::uint8_t>(code));
        if (!g.empty() && g[g.size() - 1] == l.inverse()) continue;
        std::vector<Letter> raw(g.letters().begin(), g.letters().end());
        raw.push_back(l);
        next.push_back(reduce(raw));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

unsigned rank_needed(std::span<const Letter> letters) noexcept {
  unsigned r = 0;
  for (Letter l : letters) r = std::max(r, l.generator() + 1);
  return r;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      raw.emplace_back(static_cast<unsigned>(ch - 'a'), 1);
    } else if (ch >= 'A' && ch <= 'Z') {
      raw.emplace_back(static_cast<unsigned>(ch - 'A'), -1);
    } else {
      throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, ch) + "' in \"" +
                                             std::string(text) + "\"");
    }
  }
  return reduce(raw);
}

namespace {
std::string spell(std::span<const Letter> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) {
    char base = l.sign() > 0 ? 'a' : 'A';
    s.push_back(static_cast<char>(base + static_cast<char>(l.generator())));
  }
  return s;
}
}  // namespace

std::string format(const Word& w) { return spell(w.letters()); }
std::string format(const CyclicWord& c) { return spell(c.letters()); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::string_view bytes(reinterpret_cast<const char*>(w.letters().data()), w.size());
  return std::hash<std::string_view>{}(bytes);
}

}  // namespace geobracket
