#ifndef PALWORDS_HARNESS_HPP
#define PALWORDS_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palwords/pal_tree.hpp"
#include "palwords/word.hpp"

namespace palwords {

// Verdicts -------------------------------------------------------------------

enum class Status { verified, refuted, verified_up_to_bound };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

struct Witness {
  std::string role;  // "counterexample" marks a refutation
  std::string word;
  std::string note;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ClaimVerdict {
  std::string claim_id;
  Status status = Status::verified;
  std::vector<std::pair<std::string, std::string>> bound;
  std::vector<Witness> witnesses;
  std::map<std::string, std::int64_t> metrics;
  struct Stats {
    std::uint64_t words_scanned = 0;
    double elapsed_ms = 0.0;
    friend bool operator==(const Stats&, const Stats&) = default;
  } stats;

  [[nodiscard]] std::size_t counterexample_count() const;
  [[nodiscard]] std::int64_t metric(const std::string& key) const;
  [[nodiscard]] bool has_witness(std::string_view role, std::string_view word) const;

  friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

/// Equality ignoring wall-clock time.
bool same_outcome(const ClaimVerdict& a, const ClaimVerdict& b);

// Enumeration ------------------------------------------------------------------

inline constexpr std::uint64_t kEnumerationGuard = 100'000'000;

class EnumerationGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Dedupe { none, iso_class };

/// Every word of length n over `alphabet` in lexicographic order, or one
/// representative (the canonical one) per isomorphism class. Throws
/// EnumerationGuardExceeded when |alphabet|^n > kEnumerationGuard.
class WordEnumeration {
 public:
  WordEnumeration(Alphabet alphabet, std::size_t n, Dedupe dedupe = Dedupe::none);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class WordEnumeration;
    iterator(Word start, Dedupe dedupe);
    bool advance();
    void skip_non_canonical();

    Word current_;
    Dedupe dedupe_ = Dedupe::none;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const;
  [[nodiscard]] iterator end() const { return {}; }
  [[nodiscard]] std::uint64_t raw_size() const noexcept { return raw_size_; }

 private:
  Alphabet alphabet_;
  std::size_t n_;
  Dedupe dedupe_;
  std::uint64_t raw_size_;
};

WordEnumeration enumerate_words(Alphabet alphabet, std::size_t n,
                                Dedupe dedupe = Dedupe::none);

struct ScanOptions {
  std::size_t jobs = 1;
  /// Skip (and prune) every word with more distinct palindromes than this,
  /// counting the empty word.
  std::optional<std::size_t> pal_budget;
};

/// Exhaustive depth-first scan of all words of length n, sharing palindromic
/// tree work between common prefixes. `visit(worker, word, tree)` is called
/// once per surviving word, concurrently from up to `jobs` workers (worker
/// is in [0, jobs)). Returns the number of words visited.
using ScanVisitor = std::function<void(std::size_t, const Word&, const PalTree&)>;
std::uint64_t scan_words(Alphabet alphabet, std::size_t n, const ScanOptions& options,
                         const ScanVisitor& visit);

// Bounded claim checking -------------------------------------------------------

/// Factor-closed restrictions on a word, plus required factors which are
/// only checked on complete words.
struct ConstraintSet {
  Alphabet alphabet{2};
  std::vector<Word> forbidden_factors;
  std::vector<Word> required_factors;
  /// Upper bound on |PAL(w) + assumed_palindromes|.
  std::optional<std::size_t> pal_budget;
  /// No palindromic factor longer than this.
  std::optional<std::size_t> pal_length_cap;
  /// Palindromes the surrounding infinite word is already known to contain;
  /// they count toward pal_budget whether or not w contains them.
  WordSet assumed_palindromes;
  /// For listed lengths, the only palindromes of that length allowed.
  std::map<std::size_t, WordSet> length_whitelist;
};

/// Full check of every constraint (including required factors), from scratch.
bool admits(const ConstraintSet& c, const Word& w);
/// Every constraint except required factors.
bool admits_factor_closed(const ConstraintSet& c, const Word& w);

/// prefix . block^n . suffix with min_repeats <= n (<= max_repeats).
struct FamilyTemplate {
  std::string name;
  Word prefix;
  Word block;
  Word suffix;
  std::size_t min_repeats = 0;
  std::optional<std::size_t> max_repeats;

  /// The repeat count n if w = prefix . block^n . suffix for some n >= 0,
  /// ignoring the admissible range. Throws for an empty block.
  [[nodiscard]] std::optional<std::size_t> repeats_in(const Word& w) const;
  [[nodiscard]] bool in_range(std::size_t n) const;
  [[nodiscard]] Word instance(std::size_t n) const;
  [[nodiscard]] std::string str() const;
};

struct ClaimInstance {
  std::string claim_id;
  std::string statement;
  ConstraintSet constraints;
  Word anchor;
  std::vector<FamilyTemplate> families;
};

/// All words of length <= max_length admitted by c, found with prefix pruning.
std::vector<Word> admitted_words(const ConstraintSet& c, std::size_t max_length);

/// Distinct complete first returns to `anchor` occurring in some admitted
/// word of length <= max_length, each with the first admitted word found
/// to contain it.
std::map<Word, Word> collect_first_returns(const ConstraintSet& c, const Word& anchor,
                                           std::size_t max_length,
                                           std::uint64_t* nodes = nullptr);

/// Verifies that every complete first return to `anchor` in every admitted
/// word of length <= max_length matches some family within its repeat
/// range. Refuted verdicts carry (return, containing word) witnesses.
ClaimVerdict check_claim(const ClaimInstance& claim, std::size_t max_length = 36);

/// Re-checks a refutation witness: `container` is admitted, contains
/// `offending` as a complete first return, and `offending` matches no family
/// in range.
bool replay_claim_witness(const ClaimInstance& claim, const Word& container,
                          const Word& offending);

/// Built-in first-return claims of the closed-under-reversal case analysis.
ClaimInstance returns_abaaab_claim();
ClaimInstance returns_baabaab_claim();
ClaimInstance returns_ababa_claim();
ClaimInstance returns_baaab_claim();
/// returns_baaab_claim() without the bbb restriction. Still holds: with
/// abbba and bbbb excluded, bbb can only sit at the ends of a word.
ClaimInstance returns_baaab_without_bbb_claim();
/// returns_baaab_claim() with other palindromes of length 5 allowed
/// (refutes, e.g. with the return baaabaabbabaaab).
ClaimInstance returns_baaab_any_length5_claim();

// MinPal evidence --------------------------------------------------------------

struct WordClass {
  enum class Kind {
    all,
    /// Words containing x^2 for every letter x of the alphabet.
    squares,
    /// Words in which every factor of length <= window has its reversal.
    closure_window,
  };
  Kind kind = Kind::all;
  std::size_t window = 0;

  static WordClass parse(std::string_view text);  // "all", "squares", "closure:<m>"
  [[nodiscard]] bool contains(const Word& w) const;
  [[nodiscard]] std::string str() const;
};

/// Minimum distinct-palindrome count over length-n words of the class, with
/// all argmin words as witnesses. With `expected`, the verdict refutes when
/// the minimum differs.
ClaimVerdict minpal_scan(Alphabet alphabet, const WordClass& cls, std::size_t n,
                         std::optional<std::size_t> expected = std::nullopt,
                         std::size_t jobs = 1);

// Built-in verifiers -------------------------------------------------------------

/// The nine palindromes of (aababb)^2.
WordSet nine_palindrome_set();
/// Reference sets A, B, C, D for non-rich length-12 words lacking a square.
std::vector<std::pair<std::string, WordSet>> asquare_reference_sets();
/// The thirteen palindromes of the closed-under-reversal construction.
WordSet lemma_finite_palindrome_set();
/// The fifteen palindromes of the construction with longest palindrome 5.
WordSet prop56_palindrome_set();

/// Length-14 words with ten palindromes, by class. `conjugates` widens each
/// [u] to every rotation of its members.
struct TenPalindromeClasses {
  WordSet t1, t2, t3, t4;
};
TenPalindromeClasses ten_palindrome_classes(bool conjugates);

ClaimVerdict verify_lemma_rich(std::size_t jobs = 1);
ClaimVerdict verify_min4_general(std::size_t jobs = 1);
ClaimVerdict verify_prop_9(std::size_t jobs = 1);
ClaimVerdict verify_prop_9_conjugates(std::size_t jobs = 1);
ClaimVerdict classify_prop_10(std::size_t jobs = 1);
ClaimVerdict classify_prop_10_conjugates(std::size_t jobs = 1);
ClaimVerdict verify_extension_lemma();
ClaimVerdict verify_extension_lemma_corrected();
ClaimVerdict verify_lemma_asquare(std::size_t jobs = 1);
ClaimVerdict verify_pal_length_bounds();
ClaimVerdict verify_lemma_finite();

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::function<ClaimVerdict(std::size_t jobs)> run;
};

/// Every built-in claim, sorted by id.
const std::vector<ClaimInfo>& claim_manifest();
const ClaimInfo* find_claim(std::string_view id);

/// Runs every built-in claim, up to `jobs` at a time. Results are ordered
/// by claim id regardless of completion order.
std::vector<ClaimVerdict> verify_all(std::size_t jobs = 1);

}  // namespace palwords

#endif  // PALWORDS_HARNESS_HPP
