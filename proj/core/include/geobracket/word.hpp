#ifndef GEOBRACKET_WORD_HPP
#define GEOBRACKET_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geobracket {

/// A generator or its inverse. Letters are ordered g0 < g0^-1 < g1 < g1^-1 < ...,
/// which is the order used for canonical rotations.
class Letter {
 public:
  constexpr Letter(unsigned generator, int sign) noexcept
      : code_(static_cast<std::uint8_t>(2 * generator + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) noexcept { return Letter(code); }

  constexpr unsigned generator() const noexcept { return code_ >> 1; }
  constexpr int sign() const noexcept { return (code_ & 1) ? -1 : 1; }
  constexpr std::uint8_t code() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return Letter(static_cast<std::uint8_t>(code_ ^ 1)); }

  constexpr auto operator<=>(const Letter&) const noexcept = default;

 private:
  constexpr explicit Letter(std::uint8_t code) noexcept : code_(code) {}
  std::uint8_t code_;
};

/// Freely reduced word, i.e. an element of the free group.
class Word {
 public:
  Word() = default;

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const noexcept { return letters_[i]; }

  /// Group product (concatenation followed by free reduction).
  friend Word operator*(const Word& lhs, const Word& rhs);

  bool operator==(const Word&) const = default;
  /// Shortlex order under the letter order.
  std::strong_ordering operator<=>(const Word& other) const noexcept;

 private:
  friend Word reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

/// Conjugacy class of a nontrivial element, stored as the least rotation of
/// its cyclic reduction.
class CyclicWord {
 public:
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  /// The canonical rotation read as a based word.
  Word as_word() const;

  bool operator==(const CyclicWord&) const = default;
  /// Shortlex order under the letter order.
  std::strong_ordering operator<=>(const CyclicWord& other) const noexcept;

 private:
  friend CyclicWord canonical_class(const Word& w);
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word invert(const Word& w);
Word power(const Word& w, int n);

/// Throws IdentityClass for the trivial word.
CyclicWord canonical_class(const Word& w);

/// Class of the same curve with the opposite direction.
CyclicWord invert(const CyclicWord& c);
CyclicWord power(const CyclicWord& c, int n);

struct PowerDecomposition {
  CyclicWord root;
  int exponent;
};

/// Largest exponent k with c = root^k.
PowerDecomposition is_power(const CyclicWord& c);

inline bool is_primitive(const CyclicWord& c) { return is_power(c).exponent == 1; }

/// Exact commutation test; in a free group this means a common cyclic subgroup.
bool commute(const Word& u, const Word& v);

/// Returns c with c * source * c^-1 == target. Throws ConsistencyError when the
/// two words are not conjugate.
Word conjugator(const Word& target, const Word& source);

struct Conjugate {
  Word element;
  Word conjugator;
};

/// All distinct elements g w g^-1 with |g| <= radius, each with the first
/// (shortlex least) conjugator g producing it.
std::vector<Conjugate> conjugates_with_conjugators(const Word& w, int radius, unsigned rank);

/// All distinct elements g w g^-1 with |g| <= radius over the given rank,
/// in the order the conjugators are first met (shortlex on g).
std::vector<Word> conjugates_up_to(const Word& w, int radius, unsigned rank);

/// Number of generators needed to spell w (largest index + 1).
unsigned rank_needed(std::span<const Letter> letters) noexcept;

/// `a`..`z` are generators 0..25, `A`..`Z` their inverses. The input is freely
/// reduced. Throws ParseError on any other character.
Word parse_word(std::string_view text);
std::string format(const Word& w);
std::string format(const CyclicWord& c);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace geobracket

template <>
struct std::hash<geobracket::Word> : geobracket::WordHash {};

#endif  // GEOBRACKET_WORD_HPP
