#ifndef PALWORDS_PAL_TREE_HPP
#define PALWORDS_PAL_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "palwords/word.hpp"

namespace palwords {

/// Palindromic tree (eertree) over a fixed alphabet, built one letter at a
/// time. Node 0 is the imaginary root of length -1, node 1 the empty
/// palindrome; every other node is one distinct non-empty palindromic
/// factor of the processed text.
///
/// The tree is a plain value: copying it is the intended way to branch a
/// depth-first search over extensions.
class PalTree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kImaginaryRoot = 0;
  static constexpr NodeId kEmptyRoot = 1;
  static constexpr NodeId kNone = -1;

  explicit PalTree(Alphabet alphabet);

  /// Appends one letter. Returns true iff a new palindrome appeared (at
  /// most one can).
  bool push_back(Letter x);

  void append(const Word& w) {
    for (Letter x : w) push_back(x);
  }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Word& text() const noexcept { return text_; }

  /// Total node count including both roots.
  [[nodiscard]] std::size_t node_count() const noexcept { return length_.size(); }

  /// Distinct non-empty palindromic factors of the processed text.
  [[nodiscard]] std::size_t distinct_palindromes() const noexcept {
    return node_count() - 2;
  }

  [[nodiscard]] std::int32_t length(NodeId v) const { return length_[v]; }
  [[nodiscard]] NodeId suffix_link(NodeId v) const { return link_[v]; }
  [[nodiscard]] NodeId transition(NodeId v, Letter x) const {
    return next_[static_cast<std::size_t>(v) * alphabet_.size() + x];
  }
  /// Node of the longest palindromic suffix of the processed text.
  [[nodiscard]] NodeId longest_suffix() const noexcept { return last_; }
  /// Length of the longest palindrome seen so far.
  [[nodiscard]] std::size_t max_length() const noexcept { return max_length_; }

  /// Palindrome spelled by node v (v >= 1), taken from its first occurrence.
  [[nodiscard]] Word palindrome(NodeId v) const;
  /// End position (exclusive) of the first occurrence of node v.
  [[nodiscard]] std::size_t first_end(NodeId v) const { return first_end_[v]; }

  /// Number of occurrences of each node's palindrome in the text, indexed
  /// by NodeId (roots report 0). Computed on demand from the per-position
  /// longest-suffix tallies.
  [[nodiscard]] std::vector<std::size_t> occurrence_counts() const;

 private:
  NodeId find_extendable(NodeId v, Letter x) const;
  NodeId new_node(std::int32_t length);

  Alphabet alphabet_;
  Word text_;
  std::vector<std::int32_t> length_;
  std::vector<NodeId> link_;
  std::vector<NodeId> next_;
  std::vector<std::size_t> first_end_;
  std::vector<std::size_t> suffix_tally_;
  NodeId last_ = kEmptyRoot;
  std::size_t max_length_ = 0;
};

}  // namespace palwords

#endif  // PALWORDS_PAL_TREE_HPP
