#include "palwords/pal_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace palwords {

PalTree::PalTree(Alphabet alphabet) : alphabet_(alphabet), text_(alphabet) {
  new_node(-1);
  new_node(0);
  link_[kImaginaryRoot] = kImaginaryRoot;
  link_[kEmptyRoot] = kImaginaryRoot;
}

PalTree::NodeId PalTree::new_node(std::int32_t length) {
  const auto id = static_cast<NodeId>(length_.size());
  length_.push_back(length);
  link_.push_back(kNone);
  next_.resize(next_.size() + alphabet_.size(), kNone);
  first_end_.push_back(0);
  suffix_tally_.push_back(0);
  return id;
}

// Walks suffix links from v until the palindrome of v can be wrapped by x,
// i.e. the letter just before it equals x. The imaginary root always fits.
PalTree::NodeId PalTree::find_extendable(NodeId v, Letter x) const {
  const auto pos = static_cast<std::int64_t>(text_.size()) - 1;
  while (true) {
    const std::int64_t before = pos - 1 - length_[v];
    if (before >= 0 && text_[static_cast<std::size_t>(before)] == x) return v;
    if (v == kImaginaryRoot) return v;
    v = link_[v];
  }
}

bool PalTree::push_back(Letter x) {
  if (!alphabet_.contains(x)) {
    throw std::invalid_argument("letter outside the tree's alphabet");
  }
  text_.push_back(x);
  const NodeId parent = find_extendable(last_, x);
  if (const NodeId existing = transition(parent, x); existing != kNone) {
    last_ = existing;
    ++suffix_tally_[last_];
    return false;
  }
  const NodeId q = new_node(length_[parent] + 2);
  if (length_[q] == 1) {
    link_[q] = kEmptyRoot;
  } else {
    link_[q] = transition(find_extendable(link_[parent], x), x);
  }
  next_[static_cast<std::size_t>(parent) * alphabet_.size() + x] = q;
  first_end_[q] = text_.size();
  last_ = q;
  ++suffix_tally_[q];
  max_length_ = std::max(max_length_, static_cast<std::size_t>(length_[q]));
  return true;
}

Word PalTree::palindrome(NodeId v) const {
  if (v == kImaginaryRoot) throw std::invalid_argument("imaginary root has no word");
  if (v == kEmptyRoot) return Word(alphabet_);
  const auto len = static_cast<std::size_t>(length_[v]);
  return text_.substr(first_end_[v] - len, len);
}

std::vector<std::size_t> PalTree::occurrence_counts() const {
  std::vector<std::size_t> counts = suffix_tally_;
  // Children are created after their suffix-link targets, so a reverse
  // sweep pushes every tally down the link chain exactly once.
  for (auto v = static_cast<NodeId>(counts.size()) - 1; v > kEmptyRoot; --v) {
    if (link_[v] > kEmptyRoot) counts[static_cast<std::size_t>(link_[v])] += counts[static_cast<std::size_t>(v)];
  }
  counts[kImaginaryRoot] = 0;
  counts[kEmptyRoot] = 0;
  return counts;
}

}  // namespace palwords
