#include <algorithm>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "geobracket/error.hpp"
#include "geobracket/word.hpp"
#include "ribbon_oracle.hpp"

namespace geobracket {
namespace {

using testing::Gen;

Word w(const char* text) { return parse_word(text); }
std::string f(const Word& x) { return format(x); }
std::string f(const CyclicWord& x) { return format(x); }

Word raw(const char* text) {
  std::vector<Letter> letters;
  for (const char* c = text; *c; ++c) letters.push_back(parse_word(std::string(1, *c))[0]);
  return reduce(letters);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(f(raw("abB")), "a");
  EXPECT_TRUE(raw("").empty());
  EXPECT_EQ(f(raw("aAa")), "a");
  EXPECT_EQ(f(raw("abBAb")), "b");
}

TEST(Reduce, MatchesStackOracle) {
  Gen gen(31);
  const char letters[] = "aAbB";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = gen.integer(0, 12); k > 0; --k) s.push_back(letters[gen.integer(0, 3)]);
    EXPECT_EQ(f(raw(s.c_str())), testing::reduce_letters(s)) << s;
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(f(invert(w("ab"))), "BA");
  EXPECT_TRUE(invert(Word{}).empty());
  EXPECT_EQ(f(invert(w("aa"))), "AA");
}

TEST(Invert, Involution) {
  Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    Word x = gen.word(gen.integer(0, 10));
    EXPECT_EQ(invert(invert(x)), x);
    EXPECT_TRUE((x * invert(x)).empty());
  }
}

TEST(Power, Examples) {
  EXPECT_EQ(f(power(w("ab"), 2)), "abab");
  EXPECT_EQ(f(power(w("ab"), -1)), "BA");
  EXPECT_TRUE(power(w("a"), 0).empty());
}

TEST(CanonicalClass, Examples) {
  EXPECT_EQ(f(canonical_class(w("abA"))), "b");
  EXPECT_EQ(f(canonical_class(w("ba"))), "ab");
  EXPECT_EQ(f(canonical_class(w("BA"))), "AB");
  EXPECT_THROW(canonical_class(Word{}), Error);
}

TEST(CanonicalClass, LetterOrder) {
  EXPECT_EQ(f(canonical_class(w("BAba"))), "aBAb");
  EXPECT_EQ(f(canonical_class(w("bA"))), "Ab");
  EXPECT_LT(canonical_class(w("a")), canonical_class(w("A")));
  EXPECT_LT(canonical_class(w("A")), canonical_class(w("b")));
  EXPECT_LT(canonical_class(w("B")), canonical_class(w("ab")));
}

TEST(CanonicalClass, InvariantUnderConjugation) {
  Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    Word x = gen.word(gen.integer(1, 8));
    Word g = gen.word(gen.integer(0, 6));
    if (x.empty()) continue;
    EXPECT_EQ(canonical_class(g * x * invert(g)), canonical_class(x));
  }
}

TEST(CanonicalClass, IsLeastRotation) {
  Gen gen(34);
  for (int i = 0; i < 300; ++i) {
    Word x = gen.cyclic_word(8);
    std::string s = f(x);
    std::string best = f(canonical_class(x));
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::string rot = s.substr(r) + s.substr(0, r);
      EXPECT_LE(canonical_class(w(best.c_str())), canonical_class(w(rot.c_str())));
      EXPECT_FALSE(w(rot.c_str()) < w(best.c_str())) << rot << " vs " << best;
    }
  }
}

TEST(IsPower, Examples) {
  PowerDecomposition p = is_power(canonical_class(w("abab")));
  EXPECT_EQ(f(p.root), "ab");
  EXPECT_EQ(p.exponent, 2);
  EXPECT_EQ(is_power(canonical_class(w("ab"))).exponent, 1);
  p = is_power(canonical_class(w("aabaab")));
  EXPECT_EQ(f(p.root), "aab");
  EXPECT_EQ(p.exponent, 2);
  EXPECT_TRUE(is_primitive(canonical_class(w("aabb"))));
}

TEST(IsPower, RootToThePowerGivesBack) {
  Gen gen(35);
  for (int i = 0; i < 200; ++i) {
    CyclicWord c = canonical_class(gen.cyclic_word(5));
    int n = gen.integer(1, 4);
    PowerDecomposition p = is_power(power(c, n));
    EXPECT_EQ(power(p.root, p.exponent), power(c, n));
    EXPECT_EQ(p.exponent % n, 0);
  }
}

TEST(Commute, PowersOfCommonRoot) {
  EXPECT_TRUE(commute(w("abab"), w("ab")));
  EXPECT_TRUE(commute(w("BA"), w("abab")));
  EXPECT_FALSE(commute(w("ab"), w("ba")));
  EXPECT_TRUE(commute(Word{}, w("a")));
}

TEST(Conjugator, RecoversConjugation) {
  Gen gen(36);
  for (int i = 0; i < 300; ++i) {
    Word x = gen.cyclic_word(6);
    Word g = gen.word(gen.integer(0, 6));
    Word target = g * x * invert(g);
    Word c = conjugator(target, x);
    EXPECT_EQ(c * x * invert(c), target);
  }
  EXPECT_THROW(conjugator(w("a"), w("b")), Error);
}

TEST(ConjugatesUpTo, Examples) {
  std::vector<Word> zero = conjugates_up_to(w("a"), 0, 2);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(f(zero[0]), "a");
  std::vector<Word> one = conjugates_up_to(w("a"), 1, 2);
  std::set<std::string> got;
  for (const Word& x : one) got.insert(f(x));
  EXPECT_EQ(got, (std::set<std::string>{"a", "baB", "Bab"}));
}

TEST(ConjugatesUpTo, MatchesBruteForceSet) {
  for (const char* text : {"a", "ab", "aB", "aabAB"}) {
    for (int radius = 0; radius <= 5; ++radius) {
      std::set<std::string> expected;
      std::vector<std::string> frontier{""};
      std::set<std::string> all{""};
      for (int len = 1; len <= radius; ++len) {
        std::vector<std::string> next;
        for (const std::string& g : frontier) {
          for (char c : std::string("aAbB")) {
            std::string h = testing::reduce_letters(g + c);
            if (h.size() == static_cast<std::size_t>(len)) next.push_back(h);
          }
        }
        frontier = next;
        all.insert(next.begin(), next.end());
      }
      for (const std::string& g : all) {
        expected.insert(testing::reduce_letters(g + text + testing::invert_letters(g)));
      }
      std::set<std::string> got;
      for (const Word& x : conjugates_up_to(w(text), radius, 2)) got.insert(f(x));
      EXPECT_EQ(got, expected) << text << " radius " << radius;
    }
  }
}

TEST(ConjugatesUpTo, GrowsWithRadius) {
  std::size_t previous = 0;
  for (int radius = 0; radius <= 6; ++radius) {
    std::size_t n = conjugates_up_to(w("aB"), radius, 2).size();
    EXPECT_GT(n, previous);
    previous = n;
  }
}

TEST(ConjugatesWithConjugators, ConjugatorsProduceElements) {
  for (const Conjugate& c : conjugates_with_conjugators(w("aab"), 4, 2)) {
    EXPECT_EQ(c.conjugator * w("aab") * invert(c.conjugator), c.element);
    EXPECT_LE(c.conjugator.size(), 4u);
  }
}

TEST(Parse, RoundTripAndErrors) {
  EXPECT_EQ(f(w("aBcD")), "aBcD");
  EXPECT_EQ(rank_needed(w("aBcD").letters()), 4u);
  EXPECT_TRUE(w("").empty());
  EXPECT_THROW(w("a b"), Error);
  EXPECT_THROW(w("a1"), Error);
  try {
    w("a-");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Parse, ReducesInput) { EXPECT_EQ(f(w("abBA")), ""); }

TEST(Order, Shortlex) {
  EXPECT_LT(w("B"), w("aa"));
  EXPECT_LT(w("aB"), w("Ab"));
  EXPECT_LT(w("Ab"), w("ba"));
}

}  // namespace
}  // namespace geobracket
