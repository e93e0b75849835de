#include "palwords/word.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace palwords {

Alphabet::Alphabet(std::size_t size) : size_(static_cast<std::uint8_t>(size)) {
  if (size == 0 || size > kMaxSize) {
    throw std::invalid_argument("alphabet size must be in 1..8, got " +
                                std::to_string(size));
  }
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] != static_cast<char>('a' + i)) {
      throw std::invalid_argument("alphabet symbols must read a, b, c, ... in order: '" +
                                  std::string(symbols) + "'");
    }
  }
  return Alphabet(symbols.size());
}

std::string Alphabet::symbols() const {
  std::string out;
  for (Letter x = 0; x < size_; ++x) out.push_back(symbol(x));
  return out;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (!alphabet_.contains(x)) {
      throw std::invalid_argument("letter index " + std::to_string(x) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_.size()));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::size_t needed = 2;
  for (char ch : text) {
    if (ch < 'a' || ch > 'h') {
      throw std::invalid_argument(std::string("invalid letter '") + ch +
                                  "' (words use ASCII letters a-h)");
    }
    needed = std::max<std::size_t>(needed, static_cast<std::size_t>(ch - 'a') + 1);
  }
  return parse(text, Alphabet(needed));
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch < 'a' || ch > 'h') {
      throw std::invalid_argument(std::string("invalid letter '") + ch +
                                  "' (words use ASCII letters a-h)");
    }
    letters.push_back(static_cast<Letter>(ch - 'a'));
  }
  return Word(alphabet, std::move(letters));
}

Word Word::substr(std::size_t pos, std::size_t n) const {
  if (pos > letters_.size()) pos = letters_.size();
  n = std::min(n, letters_.size() - pos);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
  return out;
}

bool Word::starts_with(const Word& v) const noexcept {
  return v.size() <= size() &&
         std::equal(v.letters_.begin(), v.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& v) const noexcept {
  return v.size() <= size() &&
         std::equal(v.letters_.rbegin(), v.letters_.rend(), letters_.rbegin());
}

bool Word::contains(const Word& v) const noexcept {
  return std::search(letters_.begin(), letters_.end(), v.letters_.begin(),
                     v.letters_.end()) != letters_.end();
}

bool Word::is_palindrome() const noexcept {
  return std::equal(letters_.begin(),
                    letters_.begin() + static_cast<std::ptrdiff_t>(size() / 2),
                    letters_.rbegin());
}

std::size_t Word::distinct_letters() const noexcept {
  std::array<bool, Alphabet::kMaxSize> seen{};
  std::size_t n = 0;
  for (Letter x : letters_) {
    if (!seen[x]) {
      seen[x] = true;
      ++n;
    }
  }
  return n;
}

void Word::push_back(Letter x) {
  if (!alphabet_.contains(x)) {
    throw std::invalid_argument("letter index " + std::to_string(x) +
                                " outside alphabet of size " +
                                std::to_string(alphabet_.size()));
  }
  letters_.push_back(x);
}

Word& Word::operator+=(const Word& other) {
  if (other.alphabet_.size() > alphabet_.size()) alphabet_ = other.alphabet_;
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::widened(Alphabet alphabet) const {
  if (alphabet.size() < alphabet_.size()) {
    for (Letter x : letters_) {
      if (!alphabet.contains(x)) {
        throw std::invalid_argument("cannot narrow word '" + str() +
                                    "' to alphabet of size " +
                                    std::to_string(alphabet.size()));
      }
    }
  }
  Word out(alphabet);
  out.letters_ = letters_;
  return out;
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(Alphabet::symbol(x));
  return out;
}

Word operator+(Word a, const Word& b) {
  a += b;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

WordSet word_set(std::initializer_list<std::string_view> words) {
  WordSet out;
  for (auto w : words) out.insert(Word::parse(w));
  return out;
}

std::vector<std::string> to_strings(const WordSet& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter indices, length mixed in.
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::reverse(letters.begin(), letters.end());
  return Word(w.alphabet(), std::move(letters));
}

std::vector<std::size_t> border_array(const Word& u) {
  std::vector<std::size_t> border(u.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    while (k > 0 && u[i] != u[k]) k = border[k - 1];
    if (u[i] == u[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::vector<std::size_t> occurrence_positions(const Word& u, const Word& v) {
  if (v.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::vector<std::size_t> out;
  if (v.size() > u.size()) return out;
  const auto border = border_array(v);
  std::size_t k = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    while (k > 0 && u[i] != v[k]) k = border[k - 1];
    if (u[i] == v[k]) ++k;
    if (k == v.size()) {
      out.push_back(i + 1 - v.size());
      k = border[k - 1];
    }
  }
  return out;
}

std::size_t occurrences(const Word& u, const Word& v) {
  return occurrence_positions(u, v).size();
}

std::size_t least_period(const Word& u) {
  if (u.empty()) {
    throw std::invalid_argument("least period is undefined for the empty word");
  }
  return u.size() - border_array(u).back();
}

bool has_period(const Word& u, std::size_t p) {
  if (p == 0) return false;
  for (std::size_t i = 0; i + p < u.size(); ++i) {
    if (u[i] != u[i + p]) return false;
  }
  return true;
}

std::size_t max_run(const Word& w, Letter x) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (Letter y : w) {
    run = (y == x) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

WordSet factors(const Word& w, std::size_t n) {
  WordSet out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

Word normalize_renaming(const Word& w) {
  std::array<int, Alphabet::kMaxSize> rename;
  rename.fill(-1);
  Letter next = 0;
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter x : w) {
    if (rename[x] < 0) rename[x] = next++;
    letters.push_back(static_cast<Letter>(rename[x]));
  }
  return Word(w.alphabet(), std::move(letters));
}

bool isomorphic(const Word& u, const Word& v) {
  return u.size() == v.size() && normalize_renaming(u) == normalize_renaming(v);
}

IsoClass::IsoClass(const Word& w)
    : canonical_(std::min(normalize_renaming(w), normalize_renaming(reverse(w)))) {}

bool IsoClass::contains(const Word& w) const {
  return IsoClass(w).canonical_ == canonical_;
}

WordSet members_of_class(const Word& w) {
  const std::size_t k = w.alphabet().size();
  std::vector<Letter> perm(k);
  std::iota(perm.begin(), perm.end(), Letter{0});
  const Word reversed = reverse(w);
  WordSet out;
  do {
    for (const Word* src : {&w, &reversed}) {
      std::vector<Letter> letters;
      letters.reserve(src->size());
      for (Letter x : *src) letters.push_back(perm[x]);
      out.insert(Word(w.alphabet(), std::move(letters)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace palwords
