#ifndef PALWORDS_WORD_HPP
#define PALWORDS_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palwords {

/// Symbol index into an Alphabet. Letter 0 renders as 'a', 1 as 'b', ...
using Letter = std::uint8_t;

/// An ordered alphabet of 1..8 symbols. Symbols are the first `size` ASCII
/// letters, so the order a < b < c < ... is the enumeration order.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 8;

  constexpr Alphabet() noexcept = default;
  explicit Alphabet(std::size_t size);

  /// Builds an alphabet from an explicit symbol list, which must read
  /// "a", "ab", "abc", ... (distinct, contiguous, starting at 'a').
  static Alphabet from_symbols(std::string_view symbols);

  [[nodiscard]] constexpr std::size_t size() const noexcept { return size_; }
  [[nodiscard]] static constexpr char symbol(Letter x) noexcept {
    return static_cast<char>('a' + x);
  }
  [[nodiscard]] std::string symbols() const;
  [[nodiscard]] constexpr bool contains(Letter x) const noexcept {
    return x < size_;
  }

  friend constexpr bool operator==(Alphabet, Alphabet) noexcept = default;

 private:
  std::uint8_t size_ = 2;
};

/// Finite word over an Alphabet. Equality and ordering compare letters only
/// (lexicographic, a proper prefix sorts first); the alphabet bounds which
/// letters are legal and how large renamings may range.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses ASCII letters a-h. With no alphabet given, the smallest
  /// standard alphabet containing every letter is used (at least binary).
  static Word parse(std::string_view text);
  static Word parse(std::string_view text, Alphabet alphabet);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] std::span<const Letter> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  /// Factor of length `n` starting at `pos` (clamped to the end).
  [[nodiscard]] Word substr(std::size_t pos, std::size_t n = npos) const;
  [[nodiscard]] Word prefix(std::size_t n) const { return substr(0, n); }

  [[nodiscard]] bool starts_with(const Word& v) const noexcept;
  [[nodiscard]] bool ends_with(const Word& v) const noexcept;
  [[nodiscard]] bool contains(const Word& v) const noexcept;
  [[nodiscard]] bool is_palindrome() const noexcept;

  /// Number of distinct letters occurring in the word, |alph(w)|.
  [[nodiscard]] std::size_t distinct_letters() const noexcept;

  void push_back(Letter x);
  void pop_back() { letters_.pop_back(); }
  Word& operator+=(const Word& other);
  Word& operator+=(Letter x) {
    push_back(x);
    return *this;
  }

  /// Same letters viewed over a larger alphabet.
  [[nodiscard]] Word widened(Alphabet alphabet) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a,
                                          const Word& b) noexcept {
    return a.letters_ <=> b.letters_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Alphabet alphabet_{};
  std::vector<Letter> letters_;
};

Word operator+(Word a, const Word& b);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// Orders by length first, then lexicographically. This is the order used
/// for every printed palindrome list.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLex>;

/// Convenience: parse a list of ASCII words into a ShortLex-ordered set.
WordSet word_set(std::initializer_list<std::string_view> words);
std::vector<std::string> to_strings(const WordSet& words);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word reverse(const Word& w);

/// Number of (possibly overlapping) occurrences of `v` in `u`.
/// Throws std::invalid_argument when `v` is empty.
std::size_t occurrences(const Word& u, const Word& v);

/// Start positions of every occurrence of `v` in `u`, ascending (KMP).
std::vector<std::size_t> occurrence_positions(const Word& u, const Word& v);

/// Border array: border[i] is the length of the longest proper border of
/// the prefix of length i + 1.
std::vector<std::size_t> border_array(const Word& u);

/// Least period pi(u). Throws std::invalid_argument for the empty word.
std::size_t least_period(const Word& u);

bool has_period(const Word& u, std::size_t p);

/// Largest k such that x^k is a factor of w (0 when x does not occur).
std::size_t max_run(const Word& w, Letter x);

/// All distinct factors of length n. Empty when n > |w|; {eps} when n == 0.
WordSet factors(const Word& w, std::size_t n);

// Isomorphism classes -------------------------------------------------------

/// Renames letters in order of first appearance (first new letter -> a,
/// next -> b, ...). This is the lexicographically least renaming of w.
Word normalize_renaming(const Word& w);

/// True iff u and v are equal up to a renaming of letters.
bool isomorphic(const Word& u, const Word& v);

/// Canonical representative of [w]: the least word among all renamings of
/// w and of its reversal.
class IsoClass {
 public:
  explicit IsoClass(const Word& w);

  [[nodiscard]] const Word& canonical() const noexcept { return canonical_; }
  [[nodiscard]] bool contains(const Word& w) const;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;

 private:
  Word canonical_;
};

inline IsoClass canonical_class(const Word& w) { return IsoClass(w); }

/// Every member of [w]: all renamings (permutations of w's alphabet) of w
/// and of its reversal, deduplicated.
WordSet members_of_class(const Word& w);

}  // namespace palwords

template <>
struct std::hash<palwords::Word> {
  std::size_t operator()(const palwords::Word& w) const noexcept {
    return palwords::WordHash{}(w);
  }
};

#endif  // PALWORDS_WORD_HPP
