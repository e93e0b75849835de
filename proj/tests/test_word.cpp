#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palwords/morphism.hpp"
#include "palwords/word.hpp"

using namespace palwords;

namespace {
Word w2(std::string_view s) { return Word::parse(s, Alphabet(2)); }
}  // namespace

TEST_CASE("alphabet bounds") {
  CHECK(Alphabet(1).size() == 1);
  CHECK(Alphabet(8).size() == 8);
  CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(9), std::invalid_argument);
  CHECK(Alphabet::from_symbols("abcd").size() == 4);
  CHECK_THROWS(Alphabet::from_symbols("abd"));
}

TEST_CASE("parsing and letters") {
  const Word w = Word::parse("abcd");
  CHECK(w.alphabet().size() == 4);
  CHECK(w.size() == 4);
  CHECK(w[2] == 2);
  CHECK(Word::parse("aaa").alphabet().size() == 2);
  CHECK(Word::parse("").empty());
  CHECK_THROWS(Word::parse("abz"));
  CHECK_THROWS(Word::parse("abc", Alphabet(2)));
  Word v = w2("ab");
  CHECK_THROWS(v.push_back(2));
  CHECK(w.str() == "abcd");
  // equality compares letters only
  CHECK(Word::parse("ab", Alphabet(2)) == Word::parse("ab", Alphabet(4)));
}

TEST_CASE("reverse") {
  CHECK(reverse(w2("aababb")).str() == "bbabaa");
  CHECK(reverse(Word()).empty());
  CHECK(reverse(w2("aba")).str() == "aba");
}

TEST_CASE("occurrences") {
  // 0 and 1 written as a and b
  CHECK(occurrences(w2("abbaaba"), w2("ab")) == 2);
  CHECK(occurrences(w2("aaa"), w2("aa")) == 2);
  CHECK(occurrences(Word::parse("abc"), Word::parse("d")) == 0);
  try {
    (void)occurrences(w2("ab"), Word());
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "pattern must be non-empty");
  }
}

TEST_CASE("occurrences match a sliding window") {
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto texts = oracle::all_words(2, n);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (const auto& v : oracle::all_words(2, m)) {
        for (std::size_t i = 0; i < texts.size(); i += (n > 8 ? 7 : 1)) {
          const auto& u = texts[i];
          REQUIRE(occurrences(w2(u), w2(v)) == oracle::occurrences(u, v));
        }
      }
    }
  }
}

TEST_CASE("least period") {
  CHECK(least_period(w2("aababbaababb")) == 6);
  CHECK(least_period(w2("aaaa")) == 1);
  CHECK(least_period(w2("abaab")) == 3);
  CHECK(least_period(w2("a")) == 1);
  CHECK_THROWS_AS((void)least_period(Word()), std::invalid_argument);
}

TEST_CASE("least period equals a brute-force scan up to length 14") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const auto& u : oracle::all_words(2, n)) {
      const Word w = w2(u);
      const auto p = least_period(w);
      REQUIRE(p == oracle::period(u));
      for (std::size_t q = 1; q < p; ++q) REQUIRE_FALSE(has_period(w, q));
      if (n <= 8) {
        for (std::size_t q = 1; q <= n; ++q) REQUIRE(has_period(w, q) == oracle::has_period(u, q));
      }
    }
  }
}

TEST_CASE("border array") {
  const auto b = border_array(w2("abaab"));
  CHECK(b == std::vector<std::size_t>{0, 0, 1, 1, 2});
}

TEST_CASE("max run") {
  CHECK(max_run(w2("aabaabbaaabba"), 0) == 3);
  CHECK(max_run(w2("bbb"), 0) == 0);
  CHECK(max_run(w2("aabaa"), 0) == 2);
}

TEST_CASE("factors") {
  CHECK(to_strings(factors(w2("aab"), 2)) == std::vector<std::string>{"aa", "ab"});
  const auto eps = factors(Word::parse("abc"), 0);
  REQUIRE(eps.size() == 1);
  CHECK(eps.begin()->empty());
  CHECK(to_strings(factors(w2("aababb"), 4)) == std::vector<std::string>{"aaba", "abab", "babb"});
  CHECK(factors(w2("ab"), 3).empty());
}

TEST_CASE("isomorphism classes") {
  CHECK(to_strings(members_of_class(w2("aababb"))) == std::vector<std::string>{"aababb", "bbabaa"});
  const IsoClass c(w2("a"));
  CHECK(c.canonical().str() == "a");
  CHECK(to_strings(members_of_class(w2("a"))) == std::vector<std::string>{"a", "b"});
  CHECK(c.contains(w2("b")));
  CHECK(isomorphic(w2("aab"), w2("bba")));
  CHECK_FALSE(isomorphic(w2("aab"), w2("baa")));
  CHECK(IsoClass(w2("aab")) == IsoClass(w2("baa")));
}

TEST_CASE("class membership matches brute-force renaming") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& u : oracle::all_words(3, n)) {
      const Word w = Word::parse(u, Alphabet(3));
      REQUIRE(oracle::strings(members_of_class(w)) == oracle::class_members(u, 3));
    }
  }
}

TEST_CASE("canonical class is invariant under reversal and renaming") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + rng() % 3;
    const std::size_t n = 1 + rng() % 12;
    std::string u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(static_cast<char>('a' + rng() % k));
    const Word w = Word::parse(u, Alphabet(k));
    const Word canon = IsoClass(w).canonical();
    CHECK(IsoClass(canon).canonical() == canon);
    CHECK(IsoClass(reverse(w)).canonical() == canon);
    const std::size_t p = least_period(w);
    for (const auto& m : oracle::class_members(u, k)) {
      const Word mw = Word::parse(m, Alphabet(k));
      REQUIRE(IsoClass(mw).canonical() == canon);
      REQUIRE(least_period(mw) == p);
    }
    CHECK(canon <= w);
  }
}

TEST_CASE("shortlex ordering") {
  const WordSet s = word_set({"bb", "a", "", "ab", "b"});
  CHECK(to_strings(s) == std::vector<std::string>{"", "a", "b", "ab", "bb"});
}

TEST_CASE("morphisms") {
  const Morphism phi = Morphism::parse("a->a, b->bc");
  CHECK(phi.source().size() == 2);
  CHECK(phi.target().size() == 3);
  CHECK(phi.apply(w2("aba")).str() == "abca");
  CHECK(phi.str() == "a->a, b->bc");
  const Morphism tau = Morphism::parse("a->ab, b->ba");
  CHECK(tau.prolongable_at(0));
  CHECK_FALSE(phi.prolongable_at(0));
  CHECK(Morphism::parse("a->aa").prolongable_at(0));
  CHECK_THROWS(Morphism::parse("a->a, a->b"));
  CHECK_THROWS(Morphism::parse("a->a, c->b"));
  CHECK_THROWS(Morphism::parse("a->, b->a"));
}
