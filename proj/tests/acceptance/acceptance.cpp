// Acceptance runner. Each criterion prints one PASS/FAIL line followed by
// indented detail. `acceptance 3 7` runs criteria 3 and 7; no arguments
// runs all of them. Exit status is the number of failed criteria (capped).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "palwords/generators.hpp"
#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"

using namespace palwords;

namespace {

Word w2(std::string_view s) { return Word::parse(s, Alphabet(2)); }

class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    lines_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    ok_ = ok_ && ok;
  }
  void note(const std::string& s) { lines_.push_back("     " + s); }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string n(std::int64_t x) { return std::to_string(x); }

std::string counterexamples(const ClaimVerdict& v, std::size_t limit = 6) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& w : v.witnesses) {
    if (w.role != "counterexample") continue;
    if (shown++ == limit) {
      out += " ...";
      break;
    }
    out += (out.empty() ? "" : ", ") + w.word + " (" + w.note + ")";
  }
  return out;
}

Outcome c01() {
  Outcome o;
  const auto s = stabilized_pal_set(paperfolding(), 16, 16384);
  o.check(s.report.count() == 29, "paperfolding palindromes including ε: " + n(s.report.count()));
  o.check(s.report.longest.size() == 13, "longest length " + n(s.report.longest.size()) + " (" + s.report.longest.str() + ")");
  o.check(!s.unstable_at_cap, "set stable from " + n(s.stable_horizon) + " through " + n(s.checked_horizon));
  const auto fixed = pal_set(paperfolding().prefix(8192));
  o.check(fixed.palindromes == s.report.palindromes, "same set on a fixed 8192-letter prefix");
  o.note("29 is the count with ε; without ε it would be 28");
  return o;
}

Outcome c02() {
  Outcome o;
  const auto s = stabilized_pal_set(resolve_stream("phi-F"), 16, 16384);
  o.check(s.report.palindromes == word_set({"", "a", "b", "c", "aa"}), "PAL = {ε,a,b,c,aa}");
  o.check(s.report.count() == 5, "count " + n(s.report.count()));
  const auto c = reversal_closure_check(resolve_stream("phi-F"), 2, 4096);
  o.check(c.has_witness(Word::parse("bc")), "bc occurs, cb does not");
  return o;
}

Outcome c03() {
  Outcome o;
  const auto s = stabilized_pal_set(resolve_stream("berstel4"), 16, 16384);
  o.check(s.report.palindromes == word_set({"", "a", "b", "c", "d"}), "PAL = {ε,a,b,c,d}");
  const auto c = reversal_closure_check(resolve_stream("berstel4"), 6, 4096);
  o.check(c.witness_missing.empty(), "no missing reversals at k=6, horizon 4096");
  return o;
}

Outcome c04() {
  Outcome o;
  const auto v = verify_lemma_rich(4);
  o.check(v.status == Status::verified, "status " + std::string(to_string(v.status)));
  o.check(v.metric("min_count") == 9, "minimum " + n(v.metric("min_count")) + " over " +
                                          n(v.metric("words_with_both_letters")) + " words");
  o.check(v.has_witness("attains-minimum", "aababbaab"), "aababbaab attains it");
  return o;
}

Outcome c05() {
  Outcome o;
  const auto v = verify_prop_9(4);
  o.check(v.status == Status::verified, "status " + std::string(to_string(v.status)));
  o.check(v.metric("nine_palindrome_words") == 2,
          "length-12 words with 9 palindromes: " + n(v.metric("nine_palindrome_words")) +
              ", squares over [aababb]: " + n(v.metric("expected_squares")));
  bool set_ok = true;
  for (const char* w : {"aababbaababb", "bbabaabbabaa"}) set_ok &= pal_set(w2(w)).palindromes == nine_palindrome_set();
  o.check(set_ok, "both squares have the printed 9-set");
  if (v.status == Status::refuted) o.note("extra words: " + counterexamples(v, 10));
  const auto conj = verify_prop_9_conjugates(4);
  o.note("with [aababb] widened to rotations: " + std::string(to_string(conj.status)) + ", " +
         n(conj.metric("expected_squares")) + " squares");
  return o;
}

Outcome c06() {
  Outcome o;
  const auto cls = classify_prop_10(4);
  o.check(cls.metric("classified_exactly_once") == cls.metric("ten_palindrome_words"),
          "words with 10 palindromes in exactly one of T1..T4: " + n(cls.metric("classified_exactly_once")) +
              " of " + n(cls.metric("ten_palindrome_words")));
  o.check(cls.metric("longest_palindrome") <= 6, "longest palindrome among them " + n(cls.metric("longest_palindrome")));
  const auto ext = verify_extension_lemma();
  o.check(ext.status == Status::verified, "extension cases: " + std::string(to_string(ext.status)));
  for (int item = 1; item <= 4; ++item) {
    const std::string key = "item" + std::to_string(item);
    o.note(key + ": " + n(ext.metric(key + "_checked")) + " checked, " + n(ext.metric(key + "_failures")) + " failed");
  }
  o.note("T1 == T2: " + std::string(cls.metric("t1_equals_t2") ? "yes" : "no") + "; sizes " +
         n(cls.metric("t1_size")) + "/" + n(cls.metric("t2_size")) + "/" + n(cls.metric("t3_size")) + "/" +
         n(cls.metric("t4_size")));
  if (cls.status == Status::refuted) o.note("e.g. " + counterexamples(cls, 3));
  if (ext.status == Status::refuted) o.note("extension failures: " + counterexamples(ext));
  const auto conj = classify_prop_10_conjugates(4);
  const auto fixed = verify_extension_lemma_corrected();
  o.note("rotation-closed classes: " + std::string(to_string(conj.status)) +
         "; case 3 applied to the whole word: " + std::string(to_string(fixed.status)));
  return o;
}

Outcome c07() {
  Outcome o;
  const auto s = stabilized_pal_set(resolve_stream("psi-F"), 16, 16384);
  o.check(s.report.palindromes ==
              word_set({"", "a", "b", "aa", "bb", "aaa", "aba", "bab", "abba", "baab", "baaab"}),
          "PAL equals the 11 listed palindromes (count " + n(s.report.count()) + ")");
  const auto c = reversal_closure_check(resolve_stream("psi-F"), 5, 4096);
  o.check(c.has_witness(w2("abaaa")), "abaaa occurs, aaaba does not");
  return o;
}

Outcome c08() {
  Outcome o;
  const auto s = stabilized_pal_set(resolve_stream("tau-P"), 16, 16384);
  o.check(s.report.count() == 17, "count " + n(s.report.count()));
  o.check(!s.unstable_at_cap, "stable from " + n(s.stable_horizon) + " through " + n(s.checked_horizon));
  return o;
}

// Longest binary word all of whose palindromes have length <= 3, found by
// brute-force level-by-level extension.
std::size_t oracle_l3() {
  std::vector<std::string> level{""};
  std::size_t len = 0;
  while (true) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (char x : {'a', 'b'}) {
        const std::string e = w + x;
        bool ok = true;
        for (const auto& p : oracle::pal_set(e)) ok &= p.size() <= 3;
        if (ok) next.push_back(e);
      }
    }
    if (next.empty()) return len;
    level = std::move(next);
    ++len;
  }
}

Outcome c09() {
  Outcome o;
  constexpr std::size_t kL3 = 8;  // frozen from oracle_l3()
  const auto v = verify_pal_length_bounds();
  o.check(v.metric("aabbab_power_longest") == 4, "(aabbab)^∞ longest palindrome " + n(v.metric("aabbab_power_longest")));
  o.check(v.metric("prop56_stabilized_count") == 15 && v.metric("prop56_longest") == 5,
          "two-connector word: " + n(v.metric("prop56_stabilized_count")) + " palindromes, longest " +
              n(v.metric("prop56_longest")));
  const auto s = stabilized_pal_set(resolve_stream("prop56"), 16, 16384);
  o.check(s.report.palindromes == prop56_palindrome_set(), "stabilized set equals the listed 15-set");
  const auto l3 = static_cast<std::size_t>(v.metric("longest_word_without_pal_gt3"));
  const auto oracle = oracle_l3();
  o.check(l3 == kL3 && oracle == kL3, "L3 = " + n(l3) + " (oracle " + n(oracle) + ", fixture " + n(kL3) + ")");
  o.check(v.status != Status::refuted, "verifier status " + std::string(to_string(v.status)));
  return o;
}

Outcome c10() {
  Outcome o;
  const ConnectorSchedule sched{{}, {w2("bbaa"), w2("aabb")}};
  bool all = true;
  for (std::size_t k = 2; k <= 8; ++k) {
    all &= pal_set(reversal_closure_block(w2("abaabbabaaabbaaba"), sched, ClosureTransform::reverse, k)).palindromes ==
           lemma_finite_palindrome_set();
  }
  o.check(all, "PAL(U_n) is the 13-set for n = 2..8");
  const auto c = reversal_closure_check(resolve_stream("lemma-finite"), 8, 4096);
  o.check(c.witness_missing.empty(), "no missing reversals at k=8, horizon 4096");
  o.check(verify_lemma_finite().status == Status::verified_up_to_bound, "verifier agrees");
  return o;
}

Outcome c11() {
  Outcome o;
  const auto v = verify_lemma_asquare(4);
  o.check(v.metric("non_rich_words") == 850, "non-rich words " + n(v.metric("non_rich_words")) + " (raw words; " +
                                                  n(v.metric("non_rich_classes")) + " classes)");
  o.check(v.metric("exceptional_sets") == 4, "distinct exceptional sets " + n(v.metric("exceptional_sets")));
  bool each = true;
  for (const auto& [name, set] : asquare_reference_sets()) {
    each &= set.size() == 12 && std::any_of(v.witnesses.begin(), v.witnesses.end(),
                                            [&](const Witness& w) { return w.role == "set-" + name; });
  }
  o.check(each, "A, B, C, D each have 12 elements and each occurs");
  o.check(pal_set(w2("aaababaabaaa")).palindromes == asquare_reference_sets()[3].second, "PAL(aaababaabaaa) = D");
  o.check(v.status == Status::verified, "status " + std::string(to_string(v.status)));
  return o;
}

Outcome c12() {
  Outcome o;
  for (auto make : {returns_abaaab_claim, returns_baabaab_claim, returns_ababa_claim, returns_baaab_claim}) {
    const ClaimInstance claim = make();
    const auto v = check_claim(claim, 36);
    o.check(v.status == Status::verified_up_to_bound,
            claim.claim_id + ": " + std::string(to_string(v.status)) + ", " + n(v.metric("returns_matched")) + "/" +
                n(v.metric("returns_found")) + " returns in families");
  }
  const ClaimInstance weak = returns_baaab_any_length5_claim();
  const auto v = check_claim(weak, 36);
  bool replays = v.counterexample_count() > 0;
  for (const auto& w : v.witnesses) {
    if (w.role != "counterexample") continue;
    const auto at = w.note.rfind("occurs in ");
    replays &= at != std::string::npos &&
               replay_claim_witness(weak, w2(w.note.substr(at + 10)), w2(w.word));
  }
  o.check(v.status == Status::refuted && replays,
          "with other length-5 palindromes allowed: " + std::string(to_string(v.status)) + ", " + n(v.counterexample_count()) +
              " replayable witnesses");
  if (v.counterexample_count()) o.note("e.g. " + counterexamples(v, 1));
  return o;
}

Outcome c13() {
  Outcome o;
  const auto b9 = minpal_scan(Alphabet(2), {}, 9, 9, 4);
  o.check(b9.status != Status::refuted && b9.metric("min_count") == 9, "binary n=9 minimum " + n(b9.metric("min_count")));
  const auto b12 = minpal_scan(Alphabet(2), {}, 12, 9, 4);
  o.check(b12.status != Status::refuted && b12.metric("min_count") == 9,
          "binary n=12 minimum " + n(b12.metric("min_count")) + " (" + n(b12.metric("argmin_count")) + " words)");
  const auto t9 = minpal_scan(Alphabet(3), {}, 9, 4, 4);
  bool periodic_abc = !t9.witnesses.empty();
  for (const auto& w : t9.witnesses) {
    const Word x = Word::parse(w.word, Alphabet(3));
    periodic_abc &= least_period(x) == 3 && x.distinct_letters() == 3;
  }
  o.check(t9.status != Status::refuted && t9.metric("min_count") == 4, "ternary n=9 minimum " + n(t9.metric("min_count")));
  o.check(periodic_abc, "all " + n(t9.metric("argmin_count")) + " ternary minimizers are (xyz)-periodic");
  return o;
}

Outcome c14() {
  Outcome o;
  std::size_t words = 0;
  std::size_t mismatches = 0;
  std::string first_bad;
  for (std::size_t len = 0; len <= 14; ++len) {
    for (const auto& u : oracle::all_words(2, len)) {
      ++words;
      if (oracle::strings(pal_set(w2(u)).palindromes) != oracle::pal_set(u)) {
        if (mismatches++ == 0) first_bad = u;
      }
    }
  }
  o.check(mismatches == 0, n(words) + " binary words of length <= 14 match the naive oracle" +
                               (first_bad.empty() ? "" : " (first mismatch " + first_bad + ")"));
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"paperfolding word: 29 palindromes, longest 13", c01},
      {"phi(F): five palindromes, bc without its reversal", c02},
      {"four-letter reversal-closure word: five palindromes, closed", c03},
      {"binary length 9 with both letters: at least 9 palindromes", c04},
      {"binary length 12 with 9 palindromes: the 2 squares over [aababb]", c05},
      {"binary length 14 with 10 palindromes: T1..T4 and the extension cases", c06},
      {"psi(F): the 11 palindromes, abaaa without its reversal", c07},
      {"tau(P): 17 palindromes", c08},
      {"longest-palindrome bounds and the 15-palindrome word", c09},
      {"bbaa/aabb construction: 13 palindromes, closed", c10},
      {"non-rich binary length 12: 850 words, sets A-D", c11},
      {"first-return claims at L=36 and a weakened claim", c12},
      {"MinPal ladder", c13},
      {"pal_set equals the naive oracle on binary words to length 14", c14},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "unknown criterion '" << argv[i] << "'\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria().size(); ++k) selected.push_back(k);
  }
  int failed = 0;
  for (std::size_t k : selected) {
    const auto& [title, run] = criteria()[k - 1];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok() ? "PASS" : "FAIL") << " criterion " << (k < 10 ? " " : "") << k << ": " << title << "\n";
    for (const auto& line : o.lines()) std::cout << "       " << line << "\n";
    failed += !o.ok();
  }
  if (selected.size() > 1) std::cout << (selected.size() - failed) << "/" << selected.size() << " criteria passed\n";
  return std::min(failed, 100);
}
