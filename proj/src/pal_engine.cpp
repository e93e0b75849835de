#include "palwords/pal_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace palwords {

PalReport make_report(const PalTree& tree) {
  PalReport report;
  report.word_length = tree.text().size();
  report.palindromes.insert(Word(tree.alphabet()));
  report.per_length[0] = 1;
  report.longest = Word(tree.alphabet());
  std::size_t best_end = 0;
  for (auto v = PalTree::kEmptyRoot + 1; v < static_cast<PalTree::NodeId>(tree.node_count()); ++v) {
    Word p = tree.palindrome(v);
    const auto len = p.size();
    ++report.per_length[len];
    if (len > report.longest.size() ||
        (len == report.longest.size() && tree.first_end(v) < best_end)) {
      report.longest = p;
      best_end = tree.first_end(v);
    }
    report.palindromes.insert(std::move(p));
  }
  return report;
}

PalReport pal_set(const Word& w) {
  PalTree tree(w.alphabet());
  tree.append(w);
  return make_report(tree);
}

std::size_t pal_count(const Word& w) {
  PalTree tree(w.alphabet());
  tree.append(w);
  return tree.distinct_palindromes() + 1;
}

bool is_rich(const Word& w) { return pal_count(w) == w.size() + 1; }

Word longest_palindrome(const Word& w) { return pal_set(w).longest; }

FirstReturns complete_first_returns(const Word& w, const Word& v) {
  const auto pos = occurrence_positions(w, v);
  FirstReturns out;
  out.anchor_found = !pos.empty();
  std::unordered_set<Word> seen;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    Word r = w.substr(pos[i], pos[i + 1] + v.size() - pos[i]);
    if (seen.insert(r).second) out.returns.push_back(std::move(r));
  }
  return out;
}

StabilizedPalSet stabilized_pal_set(const PrefixStream& s, std::size_t start,
                                    std::size_t cap) {
  if (start < 1) throw std::invalid_argument("start must be >= 1");
  if (cap < 2 * start) throw std::invalid_argument("cap must be >= 2 * start");
  const Word text = s.prefix(cap);
  PalTree tree(s.alphabet());
  StabilizedPalSet out;
  std::size_t read = 0;
  while (read < cap) {
    if (tree.push_back(text[read++])) out.stable_horizon = read;
    if (read >= start && read >= 2 * out.stable_horizon) break;
  }
  out.checked_horizon = read;
  out.unstable_at_cap = read < 2 * out.stable_horizon || read < start;
  out.report = make_report(tree);
  return out;
}

bool ClosureReport::has_witness(const Word& factor) const {
  return std::any_of(witness_missing.begin(), witness_missing.end(),
                     [&](const MissingReversal& m) { return m.factor == factor; });
}

ClosureReport reversal_closure_check(const PrefixStream& s, std::size_t k,
                                     std::size_t horizon) {
  if (horizon < 4 * k) throw std::invalid_argument("horizon must be >= 4k");
  const Word text = s.prefix(horizon);
  const Word half = text.prefix(horizon / 2);
  ClosureReport report;
  report.horizon_k = k;
  report.horizon = horizon;
  report.closed_up_to = k;
  for (std::size_t len = 1; len <= k; ++len) {
    std::unordered_set<Word> present;
    for (std::size_t i = 0; i + len <= text.size(); ++i) present.insert(text.substr(i, len));
    for (const Word& u : factors(half, len)) {
      Word r = reverse(u);
      if (!present.contains(r)) {
        report.witness_missing.push_back({u, std::move(r)});
        report.closed_up_to = std::min(report.closed_up_to, len - 1);
      }
    }
  }
  return report;
}

}  // namespace palwords
