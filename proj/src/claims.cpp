#include <algorithm>
#include <chrono>

#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"

namespace palwords {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::refuted:
      return "refuted";
    case Status::verified_up_to_bound:
      return "verified-up-to-bound";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "verified") return Status::verified;
  if (s == "refuted") return Status::refuted;
  if (s == "verified-up-to-bound") return Status::verified_up_to_bound;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

std::size_t ClaimVerdict::counterexample_count() const {
  return static_cast<std::size_t>(std::count_if(
      witnesses.begin(), witnesses.end(),
      [](const Witness& w) { return w.role == "counterexample"; }));
}

std::int64_t ClaimVerdict::metric(const std::string& key) const {
  const auto it = metrics.find(key);
  if (it == metrics.end()) throw std::out_of_range("verdict has no metric '" + key + "'");
  return it->second;
}

bool ClaimVerdict::has_witness(std::string_view role, std::string_view word) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) {
    return w.role == role && w.word == word;
  });
}

bool same_outcome(const ClaimVerdict& a, const ClaimVerdict& b) {
  return a.claim_id == b.claim_id && a.status == b.status && a.bound == b.bound &&
         a.witnesses == b.witnesses && a.metrics == b.metrics &&
         a.stats.words_scanned == b.stats.words_scanned;
}

// Constraints ------------------------------------------------------------------

namespace {

bool palindrome_allowed(const ConstraintSet& c, const Word& p) {
  if (c.pal_length_cap && p.size() > *c.pal_length_cap) return false;
  if (const auto it = c.length_whitelist.find(p.size()); it != c.length_whitelist.end()) {
    if (!it->second.contains(p)) return false;
  }
  return true;
}

std::size_t assumed_count(const ConstraintSet& c) {
  // The empty word is a palindrome of every word.
  return c.assumed_palindromes.size() +
         (c.assumed_palindromes.contains(Word(c.alphabet)) ? 0 : 1);
}

bool has_required(const ConstraintSet& c, const Word& w) {
  return std::all_of(c.required_factors.begin(), c.required_factors.end(),
                     [&](const Word& r) { return w.contains(r); });
}

}  // namespace

bool admits_factor_closed(const ConstraintSet& c, const Word& w) {
  for (const auto& f : c.forbidden_factors) {
    if (w.contains(f)) return false;
  }
  const PalReport report = pal_set(w);
  std::size_t extra = 0;
  for (const auto& p : report.palindromes) {
    if (p.empty()) continue;
    if (!palindrome_allowed(c, p)) return false;
    if (!c.assumed_palindromes.contains(p)) ++extra;
  }
  return !c.pal_budget || assumed_count(c) + extra <= *c.pal_budget;
}

bool admits(const ConstraintSet& c, const Word& w) {
  return admits_factor_closed(c, w) && has_required(c, w);
}

// Families ---------------------------------------------------------------------

std::optional<std::size_t> FamilyTemplate::repeats_in(const Word& w) const {
  if (block.empty()) throw std::invalid_argument("family '" + name + "' has an empty repeated block");
  const auto fixed = prefix.size() + suffix.size();
  if (w.size() < fixed || (w.size() - fixed) % block.size() != 0) return std::nullopt;
  if (!w.starts_with(prefix) || !w.ends_with(suffix)) return std::nullopt;
  const std::size_t n = (w.size() - fixed) / block.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (w[prefix.size() + i * block.size() + j] != block[j]) return std::nullopt;
    }
  }
  return n;
}

bool FamilyTemplate::in_range(std::size_t n) const {
  return n >= min_repeats && (!max_repeats || n <= *max_repeats);
}

Word FamilyTemplate::instance(std::size_t n) const {
  Word out = prefix;
  for (std::size_t i = 0; i < n; ++i) out += block;
  out += suffix;
  return out;
}

std::string FamilyTemplate::str() const {
  std::string out = name + " = " + prefix.str() + "(" + block.str() + ")^n" + suffix.str() +
                    ", n >= " + std::to_string(min_repeats);
  if (max_repeats) out += ", n <= " + std::to_string(*max_repeats);
  return out;
}

// Pruned search ----------------------------------------------------------------

namespace {

struct SearchState {
  Word word;
  PalTree tree;
  std::size_t extra_palindromes = 0;
};

/// Depth-first extension with factor-closed pruning; `visit` sees every
/// surviving word (including the empty word) in lexicographic preorder.
template <typename Visit>
void pruned_search(const ConstraintSet& c, std::size_t max_length, Visit&& visit) {
  const std::size_t base = assumed_count(c);
  std::vector<SearchState> stack;
  stack.push_back({Word(c.alphabet), PalTree(c.alphabet), 0});
  // Explicit stack; children are pushed in reverse so 'a' is explored first.
  while (!stack.empty()) {
    SearchState state = std::move(stack.back());
    stack.pop_back();
    visit(state.word);
    if (state.word.size() == max_length) continue;
    for (auto x = static_cast<int>(c.alphabet.size()) - 1; x >= 0; --x) {
      SearchState child = state;
      const auto letter = static_cast<Letter>(x);
      child.word.push_back(letter);
      bool ok = std::none_of(c.forbidden_factors.begin(), c.forbidden_factors.end(),
                             [&](const Word& f) { return child.word.ends_with(f); });
      if (!ok) continue;
      if (child.tree.push_back(letter)) {
        const Word p = child.tree.palindrome(child.tree.longest_suffix());
        if (!palindrome_allowed(c, p)) continue;
        if (!c.assumed_palindromes.contains(p)) ++child.extra_palindromes;
        if (c.pal_budget && base + child.extra_palindromes > *c.pal_budget) continue;
      }
      stack.push_back(std::move(child));
    }
  }
}

}  // namespace

std::vector<Word> admitted_words(const ConstraintSet& c, std::size_t max_length) {
  std::vector<Word> out;
  pruned_search(c, max_length, [&](const Word& w) {
    if (has_required(c, w)) out.push_back(w);
  });
  return out;
}

std::map<Word, Word> collect_first_returns(const ConstraintSet& c, const Word& anchor,
                                           std::size_t max_length, std::uint64_t* nodes) {
  if (anchor.empty()) throw std::invalid_argument("anchor must be non-empty");
  std::map<Word, Word> found;
  std::uint64_t visited = 0;
  pruned_search(c, max_length, [&](const Word& w) {
    ++visited;
    if (!has_required(c, w)) return;
    for (auto& r : complete_first_returns(w, anchor).returns) found.try_emplace(std::move(r), w);
  });
  if (nodes) *nodes = visited;
  return found;
}

ClaimVerdict check_claim(const ClaimInstance& claim, std::size_t max_length) {
  const auto started = std::chrono::steady_clock::now();
  for (const auto& f : claim.families) {
    if (f.block.empty()) {
      throw std::invalid_argument("family '" + f.name + "' has an empty repeated block");
    }
  }
  ClaimVerdict v;
  v.claim_id = claim.claim_id;
  v.bound = {{"max_length", std::to_string(max_length)},
             {"alphabet", std::to_string(claim.constraints.alphabet.size())}};
  std::uint64_t nodes = 0;
  const auto returns = collect_first_returns(claim.constraints, claim.anchor, max_length, &nodes);
  std::int64_t matched = 0;
  for (const auto& [r, container] : returns) {
    std::string label;
    std::string excluded;
    for (const auto& f : claim.families) {
      if (const auto n = f.repeats_in(r)) {
        if (f.in_range(*n)) {
          label = f.name + ", n=" + std::to_string(*n);
          break;
        }
        excluded = f.name + " at excluded n=" + std::to_string(*n);
      }
    }
    if (!label.empty()) {
      ++matched;
      v.witnesses.push_back({"return", r.str(), label});
    } else {
      v.witnesses.push_back({"counterexample", r.str(),
                             (excluded.empty() ? std::string("matches no family") : excluded) +
                                 "; occurs in " + container.str()});
    }
  }
  v.status = v.counterexample_count() > 0 ? Status::refuted : Status::verified_up_to_bound;
  v.metrics["returns_found"] = static_cast<std::int64_t>(returns.size());
  v.metrics["returns_matched"] = matched;
  v.stats.words_scanned = nodes;
  v.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return v;
}

bool replay_claim_witness(const ClaimInstance& claim, const Word& container,
                          const Word& offending) {
  if (!admits(claim.constraints, container)) return false;
  const auto returns = complete_first_returns(container, claim.anchor).returns;
  if (std::find(returns.begin(), returns.end(), offending) == returns.end()) return false;
  return std::none_of(claim.families.begin(), claim.families.end(), [&](const FamilyTemplate& f) {
    const auto n = f.repeats_in(offending);
    return n && f.in_range(*n);
  });
}

// Built-in claim instances -------------------------------------------------------

namespace {

Word w(std::string_view s) { return Word::parse(s, Alphabet(2)); }

WordSet assumed(std::initializer_list<std::string_view> extra) {
  // Every binary word closed under reversal with at most 12 palindromes
  // contains these nine.
  WordSet out = nine_palindrome_set();
  for (auto s : extra) out.insert(w(s));
  return out;
}

FamilyTemplate family(std::string name, std::string_view prefix, std::string_view block,
                      std::string_view suffix, std::size_t min_repeats) {
  return {std::move(name), w(prefix), w(block), w(suffix), min_repeats, std::nullopt};
}

}  // namespace

ClaimInstance returns_abaaab_claim() {
  ClaimInstance c;
  c.claim_id = "returns-abaaab";
  c.statement =
      "with aabaa and aaabaab present, no aaaa, and at most 12 palindromes, every complete "
      "first return to abaaab is abaaab(babaab)^n b abaaab, n >= 0";
  c.constraints.forbidden_factors = {w("aaaa")};
  c.constraints.required_factors = {w("aaabaab")};
  c.constraints.pal_budget = 12;
  c.constraints.assumed_palindromes = assumed({"aabaa", "aaa", "baaab"});
  c.anchor = w("abaaab");
  c.families = {family("abaaab(babaab)^n b abaaab", "abaaab", "babaab", "babaaab", 0)};
  return c;
}

ClaimInstance returns_baabaab_claim() {
  ClaimInstance c;
  c.claim_id = "returns-baabaab";
  c.statement =
      "with aabaa and baabaab present and at most 12 palindromes, every complete first return "
      "to baabaab is baabaab(babaab)^n aab or baabaab(abbaab)^n aab, n >= 1";
  c.constraints.required_factors = {w("baabaab")};
  c.constraints.pal_budget = 12;
  c.constraints.assumed_palindromes = assumed({"aabaa", "baabaab"});
  c.anchor = w("baabaab");
  c.families = {family("baabaab(babaab)^n aab", "baabaab", "babaab", "aab", 1),
                family("baabaab(abbaab)^n aab", "baabaab", "abbaab", "aab", 1)};
  return c;
}

ClaimInstance returns_ababa_claim() {
  ClaimInstance c;
  c.claim_id = "returns-ababa";
  c.statement =
      "with babab and abababb present and at most 12 palindromes, every complete first return "
      "to ababa is ababa(bbaaba)^n ba or ababa(abbaba)^n ba, n >= 0";
  c.constraints.required_factors = {w("abababb")};
  c.constraints.pal_budget = 12;
  c.constraints.assumed_palindromes = assumed({"babab", "ababa"});
  c.anchor = w("ababa");
  c.families = {family("ababa(bbaaba)^n ba", "ababa", "bbaaba", "ba", 0),
                family("ababa(abbaba)^n ba", "ababa", "abbaba", "ba", 0)};
  return c;
}

ClaimInstance returns_baaab_claim() {
  ClaimInstance c;
  c.claim_id = "returns-baaab";
  c.statement =
      "with abaaabb present, no aaaa, no bbb, baaab the only palindrome of length 5 and at most "
      "12 palindromes, every first return to baaab is x_n, y_n (n >= 1), w_n or z_n (n >= 0)";
  c.constraints.forbidden_factors = {w("aaaa"), w("bbb")};
  c.constraints.required_factors = {w("abaaabb")};
  c.constraints.pal_budget = 12;
  c.constraints.assumed_palindromes = assumed({"aaa", "baaab"});
  c.constraints.length_whitelist[5] = WordSet{w("baaab")};
  c.anchor = w("baaab");
  // First returns u are listed; the complete return is u . baaab.
  c.families = {family("x_n = baaab(baabab)^n", "baaab", "baabab", "baaab", 1),
                family("y_n = baaab(babaab)^n", "baaab", "babaab", "baaab", 1),
                family("w_n = baaab(abbaab)^n ab", "baaab", "abbaab", "abbaaab", 0),
                family("z_n = baaab(babaab)^n ba", "baaab", "babaab", "babaaab", 0)};
  return c;
}

ClaimInstance returns_baaab_without_bbb_claim() {
  ClaimInstance c = returns_baaab_claim();
  c.claim_id = "returns-baaab-without-bbb";
  c.statement = "returns-baaab with the bbb restriction dropped";
  c.constraints.forbidden_factors = {w("aaaa")};
  return c;
}

ClaimInstance returns_baaab_any_length5_claim() {
  ClaimInstance c = returns_baaab_claim();
  c.claim_id = "returns-baaab-any-length5";
  c.statement = "returns-baaab without requiring baaab to be the only palindrome of length 5";
  c.constraints.length_whitelist.clear();
  return c;
}

}  // namespace palwords
