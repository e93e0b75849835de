#ifndef PALWORDS_PAL_ENGINE_HPP
#define PALWORDS_PAL_ENGINE_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "palwords/pal_tree.hpp"
#include "palwords/stream.hpp"
#include "palwords/word.hpp"

namespace palwords {

/// Distinct palindromic factors of one finite word. The empty word is
/// always a member and always counted.
struct PalReport {
  std::size_t word_length = 0;
  WordSet palindromes;
  Word longest;
  std::map<std::size_t, std::size_t> per_length;

  [[nodiscard]] std::size_t count() const noexcept { return palindromes.size(); }
  /// (|w| + 1) - count; zero exactly for rich words.
  [[nodiscard]] std::size_t richness_defect() const noexcept {
    return word_length + 1 - count();
  }

  friend bool operator==(const PalReport&, const PalReport&) = default;
};

/// Report for whatever text `tree` has processed.
PalReport make_report(const PalTree& tree);

PalReport pal_set(const Word& w);
std::size_t pal_count(const Word& w);
bool is_rich(const Word& w);

/// A longest palindromic factor; among equals, the one occurring first.
Word longest_palindrome(const Word& w);

struct FirstReturns {
  bool anchor_found = false;
  /// Distinct complete first returns, in order of first occurrence.
  std::vector<Word> returns;
};

/// Factors of w that begin and end with v and contain exactly two
/// occurrences of v. Throws std::invalid_argument for empty v.
FirstReturns complete_first_returns(const Word& w, const Word& v);

struct StabilizedPalSet {
  PalReport report;
  /// Prefix length at which the set last grew.
  std::size_t stable_horizon = 0;
  /// Prefix length actually scanned.
  std::size_t checked_horizon = 0;
  /// True when the cap was hit before the doubling rule was satisfied.
  bool unstable_at_cap = false;
};

/// Grows the prefix of s until the palindrome set has not changed between
/// stable_horizon and checked_horizon >= 2 * stable_horizon (and at least
/// `start` letters were read), or until `cap`. Exact for the scanned
/// prefix; only a conjecture for the infinite word.
/// Requires start >= 1 and cap >= 2 * start.
StabilizedPalSet stabilized_pal_set(const PrefixStream& s, std::size_t start = 16,
                                    std::size_t cap = 16384);

struct MissingReversal {
  Word factor;
  Word reversal;
  friend bool operator==(const MissingReversal&, const MissingReversal&) = default;
};

struct ClosureReport {
  std::size_t horizon_k = 0;
  std::size_t horizon = 0;
  /// Sorted by factor length, then lexicographically.
  std::vector<MissingReversal> witness_missing;
  /// Largest k' <= horizon_k such that no factor of length <= k' lacks its
  /// reversal.
  std::size_t closed_up_to = 0;

  [[nodiscard]] bool has_witness(const Word& factor) const;
};

/// For every factor u of prefix(horizon / 2) with 1 <= |u| <= k, looks for
/// reversal(u) in prefix(horizon). Missing reversals refute closure under
/// reversal; an empty report only supports it. Requires horizon >= 4k.
ClosureReport reversal_closure_check(const PrefixStream& s, std::size_t k,
                                     std::size_t horizon);

}  // namespace palwords

#endif  // PALWORDS_PAL_ENGINE_HPP
