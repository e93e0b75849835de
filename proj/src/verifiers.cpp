#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "palwords/generators.hpp"
#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"

namespace palwords {

namespace {

using Clock = std::chrono::steady_clock;

Word bw(std::string_view s) { return Word::parse(s, Alphabet(2)); }

WordSet binary_set(std::initializer_list<std::string_view> words) {
  WordSet out;
  for (auto s : words) out.insert(bw(s));
  return out;
}

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void finish(ClaimVerdict& v, Status ok_status, Clock::time_point t0) {
  v.status = v.counterexample_count() > 0 ? Status::refuted : ok_status;
  v.stats.elapsed_ms = elapsed_since(t0);
}

void counterexample(ClaimVerdict& v, const Word& w, std::string note) {
  v.witnesses.push_back({"counterexample", w.str(), std::move(note)});
}

std::string count_note(std::size_t count) {
  return "has " + std::to_string(count) + " palindromes";
}

WordSet squares(const WordSet& roots) {
  WordSet out;
  for (const auto& u : roots) out.insert(u + u);
  return out;
}

WordSet with_conjugates(const WordSet& words) {
  WordSet out;
  for (const auto& u : words) {
    for (std::size_t i = 0; i < u.size(); ++i) out.insert(u.substr(i) + u.prefix(i));
  }
  return out;
}

WordSet class_roots(std::string_view v, bool conjugates) {
  WordSet roots = members_of_class(bw(v));
  return conjugates ? with_conjugates(roots) : roots;
}

/// Per-worker accumulation of the words with a given palindrome count.
struct CountBuckets {
  explicit CountBuckets(std::size_t jobs) : per_worker(jobs) {}
  std::vector<std::map<std::size_t, std::vector<Word>>> per_worker;

  void add(std::size_t worker, std::size_t count, const Word& w) {
    per_worker[worker][count].push_back(w);
  }
  std::map<std::size_t, WordSet> merged() const {
    std::map<std::size_t, WordSet> out;
    for (const auto& m : per_worker) {
      for (const auto& [count, words] : m) out[count].insert(words.begin(), words.end());
    }
    return out;
  }
};

/// All words of length n with at most `budget` palindromes, by count.
std::map<std::size_t, WordSet> words_by_count(Alphabet alphabet, std::size_t n,
                                              std::optional<std::size_t> budget,
                                              std::size_t jobs, std::uint64_t& scanned) {
  jobs = std::max<std::size_t>(1, jobs);
  CountBuckets buckets(jobs);
  scanned = scan_words(alphabet, n, {jobs, budget},
                       [&](std::size_t worker, const Word& w, const PalTree& tree) {
                         buckets.add(worker, tree.distinct_palindromes() + 1, w);
                       });
  return buckets.merged();
}

}  // namespace

WordSet nine_palindrome_set() {
  return binary_set({"", "a", "b", "aa", "bb", "aba", "bab", "abba", "baab"});
}

std::vector<std::pair<std::string, WordSet>> asquare_reference_sets() {
  return {
      {"A", binary_set({"", "a", "aba", "abba", "abbba", "b", "bab", "babbab", "babbbab", "bb",
                        "bbabb", "bbb"})},
      {"B", binary_set({"", "a", "aba", "abba", "b", "bab", "babab", "babbab", "bb", "bbababb",
                        "bbabb", "bbb"})},
      {"C", binary_set({"", "b", "bab", "baab", "baaab", "a", "aba", "abaaba", "abaaaba", "aa",
                        "aabaa", "aaa"})},
      {"D", binary_set({"", "b", "bab", "baab", "a", "aba", "ababa", "abaaba", "aa", "aababaa",
                        "aabaa", "aaa"})},
  };
}

WordSet lemma_finite_palindrome_set() {
  return binary_set({"", "a", "aa", "aaa", "aabaa", "aabbaa", "aba", "abba", "b", "baaab",
                     "baab", "bab", "bb"});
}

WordSet prop56_palindrome_set() {
  return binary_set({"", "a", "b", "aa", "bb", "aaa", "aba", "bab", "bbb", "abba", "baab",
                     "aabaa", "abbba", "baaab", "bbabb"});
}

TenPalindromeClasses ten_palindrome_classes(bool conjugates) {
  const WordSet v_roots = class_roots("aababb", conjugates);
  TenPalindromeClasses out;
  out.t1 = squares(class_roots("aaababb", conjugates));
  out.t2 = squares(class_roots("aababbb", conjugates));
  for (const auto& w : v_roots) {
    const Word sq = w + w;
    for (Letter alpha = 0; alpha < 2; ++alpha) {
      for (Letter beta = 0; beta < 2; ++beta) {
        Word alpha_sq = Word(Alphabet(2), {alpha}) + sq;
        Word sq_beta = sq;
        sq_beta.push_back(beta);
        if (least_period(alpha_sq) != 6 && least_period(sq_beta) == 6) {
          Word t3 = alpha_sq;
          t3.push_back(beta);
          out.t3.insert(std::move(t3));
        }
        Word sq_alpha = sq;
        sq_alpha.push_back(alpha);
        Word sq_alpha_beta = sq_alpha;
        sq_alpha_beta.push_back(beta);
        if (least_period(sq_alpha) == 6 && least_period(sq_alpha_beta) != 6) {
          out.t4.insert(std::move(sq_alpha_beta));
        }
      }
    }
  }
  return out;
}

// Lemma: length-9 binary words using both letters -------------------------------

ClaimVerdict verify_lemma_rich(std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "lemma-rich";
  v.bound = {{"alphabet", "2"}, {"length", "9"}};
  std::uint64_t scanned = 0;
  const auto buckets = words_by_count(Alphabet(2), 9, std::nullopt, jobs, scanned);
  std::size_t best = SIZE_MAX;
  WordSet argmin;
  std::int64_t considered = 0;
  for (const auto& [count, words] : buckets) {
    for (const auto& w : words) {
      if (w.distinct_letters() != 2) continue;
      ++considered;
      if (count < best) {
        best = count;
        argmin.clear();
      }
      if (count == best) argmin.insert(w);
    }
  }
  v.metrics["words_with_both_letters"] = considered;
  v.metrics["min_count"] = static_cast<std::int64_t>(best);
  v.metrics["argmin_count"] = static_cast<std::int64_t>(argmin.size());
  for (const auto& w : argmin) {
    if (best < 9) {
      counterexample(v, w, count_note(best));
    } else {
      v.witnesses.push_back({"attains-minimum", w.str(), count_note(best)});
    }
  }
  v.stats.words_scanned = scanned;
  finish(v, Status::verified, t0);
  return v;
}

// At least four palindromes; exactly four only on (xyz)-periodic words ---------

ClaimVerdict verify_min4_general(std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "min4-general";
  v.bound = {{"alphabet", "<=4"}, {"length", "<=12"}};
  const Alphabet four(4);
  std::uint64_t scanned = 0;
  std::int64_t below_four = 0;
  std::size_t longest_below_four = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    std::uint64_t s = 0;
    const auto buckets = words_by_count(four, n, 3, jobs, s);
    scanned += s;
    for (const auto& [count, words] : buckets) {
      if (!words.empty()) longest_below_four = n;
      if (n >= 3) {
        for (const auto& w : words) {
          ++below_four;
          counterexample(v, w, count_note(count));
        }
      }
    }
  }
  std::uint64_t s = 0;
  const auto four_pals = words_by_count(four, 12, 4, jobs, s)[4];
  scanned += s;
  for (const auto& w : four_pals) {
    const bool periodic_xyz =
        least_period(w) == 3 && w.prefix(3).distinct_letters() == 3 && w.distinct_letters() == 3;
    if (!periodic_xyz) counterexample(v, w, "4 palindromes but not a factor of (xyz)^infinity");
  }
  if (four_pals.empty()) counterexample(v, Word(four), "no length-12 word attains 4 palindromes");
  if (!four_pals.empty()) v.witnesses.push_back({"exactly-four", four_pals.begin()->str(), "4 palindromes"});

  const auto binary = words_by_count(Alphabet(2), 12, 9, jobs, s);
  scanned += s;
  const std::size_t binary_min = binary.empty() ? 0 : binary.begin()->first;
  if (binary_min != 9) {
    counterexample(v, *binary.begin()->second.begin(), "binary length-12 minimum is not 9");
  }
  v.metrics["words_below_four_len_ge3"] = below_four;
  v.metrics["longest_word_below_four"] = static_cast<std::int64_t>(longest_below_four);
  v.metrics["exactly_four_len12"] = static_cast<std::int64_t>(four_pals.size());
  v.metrics["binary_min_len12"] = static_cast<std::int64_t>(binary_min);
  v.stats.words_scanned = scanned;
  finish(v, Status::verified_up_to_bound, t0);
  return v;
}

// Exactly nine palindromes at length 12 ------------------------------------------

namespace {

ClaimVerdict prop9_impl(std::string id, bool conjugates, std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.bound = {{"alphabet", "2"}, {"length", "12"}};
  std::uint64_t scanned = 0;
  auto buckets = words_by_count(Alphabet(2), 12, 9, jobs, scanned);
  for (const auto& [count, words] : buckets) {
    if (count < 9) {
      for (const auto& w : words) counterexample(v, w, count_note(count));
    }
  }
  const WordSet& nine = buckets[9];
  const WordSet roots = class_roots("aababb", conjugates);
  const WordSet expected = squares(roots);
  const WordSet nine_set = nine_palindrome_set();
  for (const auto& w : nine) {
    if (!expected.contains(w)) {
      counterexample(v, w, conjugates ? "9 palindromes but not a square of a rotation over [aababb]"
                                      : "9 palindromes but not a square over [aababb]");
    }
  }
  for (const auto& w : expected) {
    if (!nine.contains(w)) counterexample(v, w, "expected square " + count_note(pal_count(w)));
    if (pal_set(w).palindromes != nine_set) counterexample(v, w, "palindrome set differs from the 9-set");
  }
  std::int64_t extensions = 0;
  for (const auto& u : roots) {
    for (Letter alpha = 0; alpha < 2; ++alpha) {
      Word ext = u + u;
      ext.push_back(alpha);
      if (least_period(ext) != 6) {
        ++extensions;
        if (pal_count(ext) < 10) counterexample(v, ext, "period-breaking extension " + count_note(pal_count(ext)));
      }
    }
  }
  v.metrics["nine_palindrome_words"] = static_cast<std::int64_t>(nine.size());
  v.metrics["expected_squares"] = static_cast<std::int64_t>(expected.size());
  v.metrics["period_breaking_extensions"] = extensions;
  for (const auto& w : nine) {
    if (expected.contains(w)) v.witnesses.push_back({"nine-palindromes", w.str(), ""});
  }
  v.stats.words_scanned = scanned;
  finish(v, Status::verified, t0);
  return v;
}

}  // namespace

ClaimVerdict verify_prop_9(std::size_t jobs) { return prop9_impl("prop9", false, jobs); }
ClaimVerdict verify_prop_9_conjugates(std::size_t jobs) {
  return prop9_impl("prop9-conjugates", true, jobs);
}

// Ten palindromes at length 14 -------------------------------------------------------

namespace {

ClaimVerdict prop10_impl(std::string id, bool conjugates, std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.bound = {{"alphabet", "2"}, {"length", "14"}};
  std::uint64_t scanned = 0;
  auto buckets = words_by_count(Alphabet(2), 14, 10, jobs, scanned);
  const WordSet& ten = buckets[10];
  const auto cls = ten_palindrome_classes(conjugates);
  // With rotations allowed, [av] and [vb] coincide, so the two period-7
  // families are one class.
  std::vector<std::pair<std::string, WordSet>> classes;
  if (conjugates) {
    WordSet period7 = cls.t1;
    period7.insert(cls.t2.begin(), cls.t2.end());
    classes = {{"T1/T2", period7}, {"T3", cls.t3}, {"T4", cls.t4}};
  } else {
    classes = {{"T1", cls.t1}, {"T2", cls.t2}, {"T3", cls.t3}, {"T4", cls.t4}};
  }
  std::int64_t classified = 0;
  std::size_t longest = 0;
  for (const auto& w : ten) {
    std::string hits;
    std::size_t n_hits = 0;
    for (const auto& [name, set] : classes) {
      if (set.contains(w)) {
        hits += (n_hits++ ? "," : "") + name;
      }
    }
    if (n_hits == 1) ++classified;
    if (n_hits == 0) counterexample(v, w, "10 palindromes, in no class");
    if (n_hits > 1) counterexample(v, w, "10 palindromes, in several classes: " + hits);
    const auto len = longest_palindrome(w).size();
    longest = std::max(longest, len);
    if (len > 6) counterexample(v, w, "longest palindrome has length " + std::to_string(len));
  }
  std::int64_t members = 0;
  std::int64_t members_with_ten = 0;
  for (const auto& [name, set] : classes) {
    for (const auto& w : set) {
      ++members;
      if (ten.contains(w)) ++members_with_ten;
    }
  }
  v.metrics["ten_palindrome_words"] = static_cast<std::int64_t>(ten.size());
  v.metrics["classified_exactly_once"] = classified;
  v.metrics["class_members"] = members;
  v.metrics["class_members_with_ten"] = members_with_ten;
  v.metrics["t1_equals_t2"] = cls.t1 == cls.t2 ? 1 : 0;
  v.metrics["t1_size"] = static_cast<std::int64_t>(cls.t1.size());
  v.metrics["t2_size"] = static_cast<std::int64_t>(cls.t2.size());
  v.metrics["t3_size"] = static_cast<std::int64_t>(cls.t3.size());
  v.metrics["t4_size"] = static_cast<std::int64_t>(cls.t4.size());
  v.metrics["longest_palindrome"] = static_cast<std::int64_t>(longest);
  v.stats.words_scanned = scanned;
  finish(v, Status::verified, t0);
  return v;
}

/// Checks the four extension cases. `extend_from_t3_whole` applies item 3
/// to alpha w^2 beta gamma instead of w^2 beta gamma.
ClaimVerdict extension_impl(std::string id, bool conjugates, bool extend_from_t3_whole) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.bound = {{"alphabet", "2"}, {"sets", conjugates ? "with rotations" : "as defined"}};
  const auto cls = ten_palindrome_classes(conjugates);
  std::uint64_t checked = 0;
  std::int64_t period_preserving = 0;
  std::int64_t period_preserving_ten = 0;
  auto check = [&](const std::string& item, const Word& ext) {
    ++checked;
    ++v.metrics[item + "_checked"];
    const auto c = pal_count(ext);
    if (c != 11) {
      ++v.metrics[item + "_failures"];
      counterexample(v, ext, item + ": " + count_note(c) + ", expected 11");
    }
  };
  for (const auto& [item, set] : {std::pair{"item1", &cls.t1}, std::pair{"item2", &cls.t2}}) {
    v.metrics[std::string(item) + "_failures"] += 0;
    for (const auto& sq : *set) {
      for (Letter g = 0; g < 2; ++g) {
        Word ext = sq;
        ext.push_back(g);
        if (least_period(ext) != 7) {
          check(item, ext);
        } else {
          ++period_preserving;
          if (pal_count(ext) == 10) ++period_preserving_ten;
        }
      }
    }
  }
  v.metrics["item3_failures"] += 0;
  for (const auto& t : cls.t3) {
    const Word tail = t.substr(1);  // w^2 beta
    for (Letter g = 0; g < 2; ++g) {
      Word tail_g = tail;
      tail_g.push_back(g);
      if (least_period(tail_g) == 6) continue;
      Word whole = t;
      whole.push_back(g);
      check("item3", extend_from_t3_whole ? whole : tail_g);
    }
  }
  v.metrics["item4_failures"] += 0;
  for (const auto& t : cls.t4) {
    for (Letter g = 0; g < 2; ++g) {
      Word ext = t;
      ext.push_back(g);
      check("item4", ext);
    }
  }
  v.metrics["period7_extensions"] = period_preserving;
  v.metrics["period7_extensions_with_ten"] = period_preserving_ten;
  v.stats.words_scanned = checked;
  finish(v, Status::verified, t0);
  return v;
}

}  // namespace

ClaimVerdict classify_prop_10(std::size_t jobs) { return prop10_impl("prop10-classes", false, jobs); }
ClaimVerdict classify_prop_10_conjugates(std::size_t jobs) {
  return prop10_impl("prop10-classes-conjugates", true, jobs);
}
ClaimVerdict verify_extension_lemma() { return extension_impl("extension-lemma", false, false); }
ClaimVerdict verify_extension_lemma_corrected() {
  return extension_impl("extension-lemma-corrected", true, true);
}

// Non-rich length-12 words -----------------------------------------------------------

ClaimVerdict verify_lemma_asquare(std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "lemma-asquare";
  v.bound = {{"alphabet", "2"}, {"length", "12"}};
  jobs = std::max<std::size_t>(1, jobs);
  struct Local {
    std::int64_t non_rich = 0;
    std::vector<Word> non_rich_words;
    std::map<WordSet, Word, std::less<>> exceptional;  // pal set -> least word
  };
  std::vector<Local> locals(jobs);
  const Word aa = bw("aa");
  const Word bb = bw("bb");
  v.stats.words_scanned = scan_words(
      Alphabet(2), 12, {jobs, std::nullopt},
      [&](std::size_t worker, const Word& w, const PalTree& tree) {
        if (tree.distinct_palindromes() + 1 >= 13) return;
        auto& local = locals[worker];
        ++local.non_rich;
        local.non_rich_words.push_back(w);
        PalReport report = make_report(tree);
        if (report.palindromes.contains(aa) && report.palindromes.contains(bb)) return;
        auto [it, inserted] = local.exceptional.try_emplace(std::move(report.palindromes), w);
        if (!inserted && w < it->second) it->second = w;
      });
  std::int64_t non_rich = 0;
  std::set<Word> classes;
  std::map<WordSet, Word, std::less<>> exceptional;
  for (auto& local : locals) {
    non_rich += local.non_rich;
    for (const auto& w : local.non_rich_words) classes.insert(IsoClass(w).canonical());
    for (auto& [set, w] : local.exceptional) {
      auto [it, inserted] = exceptional.try_emplace(set, w);
      if (!inserted && w < it->second) it->second = w;
    }
  }
  v.metrics["non_rich_words"] = non_rich;
  v.metrics["non_rich_classes"] = static_cast<std::int64_t>(classes.size());
  v.metrics["exceptional_sets"] = static_cast<std::int64_t>(exceptional.size());
  if (non_rich != 850) {
    counterexample(v, Word(Alphabet(2)), "non-rich count is " + std::to_string(non_rich) + ", expected 850");
  }
  const auto refs = asquare_reference_sets();
  for (const auto& [set, w] : exceptional) {
    const auto it = std::find_if(refs.begin(), refs.end(), [&](const auto& r) { return r.second == set; });
    if (it == refs.end()) {
      counterexample(v, w, "lacks aa or bb with an unlisted palindrome set");
    } else {
      v.witnesses.push_back({"set-" + it->first, w.str(), "least word with this palindrome set"});
    }
  }
  for (const auto& [name, set] : refs) {
    if (set.size() != 12) counterexample(v, Word(Alphabet(2)), "set " + name + " does not have 12 elements");
    if (!exceptional.contains(set)) counterexample(v, Word(Alphabet(2)), "set " + name + " never occurs");
  }
  const Word d_witness = bw("aaababaabaaa");
  if (pal_set(d_witness).palindromes != refs[3].second) {
    counterexample(v, d_witness, "palindrome set is not D");
  } else {
    v.witnesses.push_back({"witness-D", d_witness.str(), "PAL equals D"});
  }
  finish(v, Status::verified, t0);
  return v;
}

// Longest-palindrome bounds ------------------------------------------------------------

ClaimVerdict verify_pal_length_bounds() {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "pal-length-bounds";
  constexpr std::size_t kSearchLimit = 64;
  constexpr std::size_t kReturnSearch = 36;
  v.bound = {{"avoidance_search_length", std::to_string(kSearchLimit)},
             {"return_search_length", std::to_string(kReturnSearch)},
             {"stream_cap", "16384"}};

  // Binary words whose palindromes all have length <= 3.
  ConstraintSet short_pals;
  short_pals.pal_length_cap = 3;
  const auto avoiders = admitted_words(short_pals, kSearchLimit);
  std::size_t l3 = 0;
  for (const auto& w : avoiders) l3 = std::max(l3, w.size());
  if (l3 == kSearchLimit) {
    counterexample(v, avoiders.back(), "avoidance search did not terminate below the limit");
  }
  for (const auto& w : avoiders) {
    if (w.size() == l3) v.witnesses.push_back({"longest-avoider", w.str(), "no palindrome longer than 3"});
  }
  v.metrics["longest_word_without_pal_gt3"] = static_cast<std::int64_t>(l3);
  v.metrics["words_without_pal_gt3"] = static_cast<std::int64_t>(avoiders.size());

  // (aabbab)^infinity: longest palindrome 4.
  const Word periodic_prefix = periodic(bw("aabbab")).prefix(600);
  const auto periodic_longest = longest_palindrome(periodic_prefix).size();
  v.metrics["aabbab_power_longest"] = static_cast<std::int64_t>(periodic_longest);
  if (periodic_longest != 4) counterexample(v, bw("aabbab"), "power has longest palindrome " + std::to_string(periodic_longest));

  // The two-connector construction keeps exactly fifteen palindromes.
  const ConnectorSchedule schedule{{}, {bw("ab"), bw("ba")}};
  const WordSet fifteen = prop56_palindrome_set();
  for (std::size_t n = 2; n <= 8; ++n) {
    const Word u = reversal_closure_block(bw("aabb"), schedule, ClosureTransform::reverse, n);
    if (pal_set(u).palindromes != fifteen) {
      counterexample(v, u.prefix(64), "U_" + std::to_string(n) + " palindrome set differs");
    }
  }
  const auto stable = stabilized_pal_set(resolve_stream("prop56"), 16, 16384);
  v.metrics["prop56_stabilized_count"] = static_cast<std::int64_t>(stable.report.count());
  v.metrics["prop56_longest"] = static_cast<std::int64_t>(stable.report.longest.size());
  if (stable.report.palindromes != fifteen || stable.report.longest.size() != 5 || stable.unstable_at_cap) {
    counterexample(v, stable.report.longest, "stabilized set is not the fifteen-set with longest 5");
  }

  // Complete first returns to aab when aaa, bbb and palindromes > 4 are absent.
  ConstraintSet returns_ctx;
  returns_ctx.forbidden_factors = {bw("aaa"), bw("bbb")};
  returns_ctx.pal_length_cap = 4;
  std::uint64_t nodes = 0;
  const auto returns = collect_first_returns(returns_ctx, bw("aab"), kReturnSearch, &nodes);
  const WordSet allowed = binary_set({"aababbaab", "aabbabaab"});
  for (const auto& [r, container] : returns) {
    if (!allowed.contains(r)) {
      counterexample(v, r, "unexpected first return to aab in " + container.str());
    } else {
      v.witnesses.push_back({"return-to-aab", r.str(), ""});
    }
  }
  v.metrics["returns_to_aab"] = static_cast<std::int64_t>(returns.size());
  v.stats.words_scanned = avoiders.size() + nodes;
  finish(v, Status::verified_up_to_bound, t0);
  return v;
}

// Closed-under-reversal word with thirteen palindromes ------------------------------

ClaimVerdict verify_lemma_finite() {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "lemma-finite";
  v.bound = {{"blocks", "U_2..U_8"}, {"closure_k", "8"}, {"closure_horizon", "4096"}};
  const Word u0 = bw("abaabbabaaabbaaba");
  const ConnectorSchedule schedule{{}, {bw("bbaa"), bw("aabb")}};
  const Word u1 = reversal_closure_block(u0, schedule, ClosureTransform::reverse, 1);
  if (u1 != bw("abaabbabaaabbaaba" "bbaa" "abaabbaaababbaaba")) counterexample(v, u1, "U_1 differs from the printed block");
  const Word u2 = reversal_closure_block(u0, schedule, ClosureTransform::reverse, 2);
  if (u2 != bw("abaabbabaaabbaababbaaabaabbaaababbaaba" "aabb" "abaabbabaaabbaabaaabbabaabbaaababbaaba")) {
    counterexample(v, u2, "U_2 differs from the printed block");
  }
  const WordSet thirteen = lemma_finite_palindrome_set();
  std::uint64_t letters = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const Word u = reversal_closure_block(u0, schedule, ClosureTransform::reverse, n);
    letters += u.size();
    const auto report = pal_set(u);
    v.metrics["U" + std::to_string(n) + "_count"] = static_cast<std::int64_t>(report.count());
    if (report.palindromes != thirteen) {
      counterexample(v, u.prefix(64), "U_" + std::to_string(n) + " has " + count_note(report.count()));
    }
  }
  const auto closure = reversal_closure_check(resolve_stream("lemma-finite"), 8, 4096);
  v.metrics["closure_witnesses"] = static_cast<std::int64_t>(closure.witness_missing.size());
  for (const auto& m : closure.witness_missing) counterexample(v, m.factor, "reversal " + m.reversal.str() + " missing");
  v.stats.words_scanned = letters;
  finish(v, Status::verified_up_to_bound, t0);
  return v;
}

// Named infinite words ---------------------------------------------------------------

namespace {

struct StreamExpectation {
  std::string claim_id;
  std::string preset;
  std::optional<WordSet> palindromes;
  std::size_t count;
  std::optional<std::size_t> longest;
  std::size_t closure_k;
  std::size_t closure_horizon;
  std::optional<Word> missing_reversal_of;  // nullopt: expect closure
};

ClaimVerdict verify_stream(const StreamExpectation& e) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = e.claim_id;
  v.bound = {{"stream", e.preset},
             {"cap", "16384"},
             {"closure_k", std::to_string(e.closure_k)},
             {"closure_horizon", std::to_string(e.closure_horizon)}};
  const PrefixStream s = resolve_stream(e.preset);
  const auto stable = stabilized_pal_set(s, 16, 16384);
  const auto& report = stable.report;
  v.metrics["count"] = static_cast<std::int64_t>(report.count());
  v.metrics["longest"] = static_cast<std::int64_t>(report.longest.size());
  v.metrics["stable_horizon"] = static_cast<std::int64_t>(stable.stable_horizon);
  v.metrics["checked_horizon"] = static_cast<std::int64_t>(stable.checked_horizon);
  if (stable.unstable_at_cap) counterexample(v, report.longest, "palindrome set still growing at cap");
  if (report.count() != e.count) counterexample(v, report.longest, "stabilized set " + count_note(report.count()));
  if (e.palindromes && report.palindromes != *e.palindromes) {
    counterexample(v, report.longest, "stabilized set differs from the listed set");
  }
  if (e.longest && report.longest.size() != *e.longest) {
    counterexample(v, report.longest, "longest palindrome has length " + std::to_string(report.longest.size()));
  }
  v.witnesses.push_back({"longest", report.longest.str(), ""});
  const auto closure = reversal_closure_check(s, e.closure_k, e.closure_horizon);
  v.metrics["closure_witnesses"] = static_cast<std::int64_t>(closure.witness_missing.size());
  v.metrics["closed_up_to"] = static_cast<std::int64_t>(closure.closed_up_to);
  if (e.missing_reversal_of) {
    if (!closure.has_witness(*e.missing_reversal_of)) {
      counterexample(v, *e.missing_reversal_of, "reversal was found within the horizon");
    } else {
      v.witnesses.push_back({"missing-reversal", e.missing_reversal_of->str(),
                             "reversal " + reverse(*e.missing_reversal_of).str() + " absent"});
    }
  } else {
    for (const auto& m : closure.witness_missing) {
      counterexample(v, m.factor, "reversal " + m.reversal.str() + " missing");
    }
  }
  v.stats.words_scanned = stable.checked_horizon + e.closure_horizon;
  finish(v, Status::verified_up_to_bound, t0);
  return v;
}

std::vector<StreamExpectation> stream_expectations() {
  return {
      {"stream-berstel4", "berstel4", word_set({"", "a", "b", "c", "d"}), 5, 1, 6, 4096, std::nullopt},
      {"stream-paperfolding", "paperfolding", std::nullopt, 29, 13, 5, 4096, bw("aaaba")},
      {"stream-phi-F", "phi-F", word_set({"", "a", "b", "c", "aa"}), 5, 2, 2, 4096, Word::parse("bc")},
      {"stream-psi-F", "psi-F",
       binary_set({"", "a", "b", "aa", "bb", "aaa", "aba", "bab", "abba", "baab", "baaab"}), 11, 5, 5,
       4096, bw("abaaa")},
      {"stream-tau-P", "tau-P", std::nullopt, 17, std::nullopt, 8, 8192, std::nullopt},
  };
}

}  // namespace

// MinPal evidence ------------------------------------------------------------------

WordClass WordClass::parse(std::string_view text) {
  if (text == "all") return {Kind::all, 0};
  if (text == "squares") return {Kind::squares, 0};
  if (text.starts_with("closure:")) {
    const auto digits = text.substr(8);
    std::size_t m = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad closure window '" + std::string(text) + "'");
      m = m * 10 + static_cast<std::size_t>(c - '0');
    }
    if (digits.empty() || m == 0) throw std::invalid_argument("closure window must be >= 1");
    return {Kind::closure_window, m};
  }
  throw std::invalid_argument("unknown word class '" + std::string(text) +
                              "' (use all, squares or closure:<m>)");
}

bool WordClass::contains(const Word& w) const {
  switch (kind) {
    case Kind::all:
      return true;
    case Kind::squares:
      for (Letter x = 0; x < w.alphabet().size(); ++x) {
        if (max_run(w, x) < 2) return false;
      }
      return true;
    case Kind::closure_window:
      for (std::size_t len = 1; len <= window && len <= w.size(); ++len) {
        for (const auto& u : factors(w, len)) {
          if (!w.contains(reverse(u))) return false;
        }
      }
      return true;
  }
  return false;
}

std::string WordClass::str() const {
  switch (kind) {
    case Kind::all:
      return "all";
    case Kind::squares:
      return "squares";
    case Kind::closure_window:
      return "closure:" + std::to_string(window);
  }
  return "?";
}

ClaimVerdict minpal_scan(Alphabet alphabet, const WordClass& cls, std::size_t n,
                         std::optional<std::size_t> expected, std::size_t jobs) {
  const auto t0 = Clock::now();
  ClaimVerdict v;
  v.claim_id = "minpal-" + std::to_string(alphabet.size()) + "-" + std::to_string(n) + "-" + cls.str();
  v.bound = {{"alphabet", std::to_string(alphabet.size())}, {"length", std::to_string(n)}, {"class", cls.str()}};
  jobs = std::max<std::size_t>(1, jobs);
  struct Local {
    std::size_t best = SIZE_MAX;
    std::vector<Word> argmin;
    std::int64_t members = 0;
  };
  std::vector<Local> locals(jobs);
  v.stats.words_scanned = scan_words(alphabet, n, {jobs, std::nullopt},
                                     [&](std::size_t worker, const Word& w, const PalTree& tree) {
                                       if (!cls.contains(w)) return;
                                       auto& l = locals[worker];
                                       ++l.members;
                                       const auto c = tree.distinct_palindromes() + 1;
                                       if (c < l.best) {
                                         l.best = c;
                                         l.argmin.clear();
                                       }
                                       if (c == l.best) l.argmin.push_back(w);
                                     });
  std::size_t best = SIZE_MAX;
  std::int64_t members = 0;
  for (const auto& l : locals) {
    best = std::min(best, l.best);
    members += l.members;
  }
  WordSet argmin;
  for (const auto& l : locals) {
    if (l.best == best) argmin.insert(l.argmin.begin(), l.argmin.end());
  }
  v.metrics["class_members"] = members;
  v.metrics["argmin_count"] = static_cast<std::int64_t>(argmin.size());
  if (members == 0) {
    v.metrics["min_count"] = -1;
    if (expected) counterexample(v, Word(alphabet), "class is empty at this length");
    finish(v, Status::verified_up_to_bound, t0);
    return v;
  }
  v.metrics["min_count"] = static_cast<std::int64_t>(best);
  constexpr std::size_t kMaxListed = 64;
  std::size_t listed = 0;
  for (const auto& w : argmin) {
    if (listed++ == kMaxListed) break;
    if (expected && best != *expected) {
      counterexample(v, w, count_note(best) + ", expected minimum " + std::to_string(*expected));
    } else {
      v.witnesses.push_back({"argmin", w.str(), count_note(best)});
    }
  }
  finish(v, Status::verified_up_to_bound, t0);
  return v;
}

// Manifest ---------------------------------------------------------------------------

const std::vector<ClaimInfo>& claim_manifest() {
  static const std::vector<ClaimInfo> manifest = [] {
    std::vector<ClaimInfo> m = {
        {"lemma-rich", "binary words of length 9 using both letters have at least 9 palindromes",
         [](std::size_t j) { return verify_lemma_rich(j); }},
        {"min4-general",
         "every word of length >= 3 has at least 4 palindromes; length-12 words with exactly 4 are "
         "factors of (xyz)^infinity with x, y, z distinct",
         [](std::size_t j) { return verify_min4_general(j); }},
        {"prop9", "binary length-12 words with exactly 9 palindromes are exactly u^2, u in [aababb]",
         [](std::size_t j) { return verify_prop_9(j); }},
        {"prop9-conjugates",
         "binary length-12 words with exactly 9 palindromes are exactly u^2, u a rotation of a member "
         "of [aababb]",
         [](std::size_t j) { return verify_prop_9_conjugates(j); }},
        {"prop10-classes",
         "binary length-14 words with exactly 10 palindromes lie in exactly one of T1..T4, with "
         "longest palindrome <= 6",
         [](std::size_t j) { return classify_prop_10(j); }},
        {"prop10-classes-conjugates",
         "as prop10-classes with every [u] widened to rotations and T1 = T2 merged",
         [](std::size_t j) { return classify_prop_10_conjugates(j); }},
        {"extension-lemma", "every single-letter extension in the four cases yields 11 palindromes",
         [](std::size_t) { return verify_extension_lemma(); }},
        {"extension-lemma-corrected",
         "as extension-lemma with rotations allowed and case 3 extending alpha w^2 beta",
         [](std::size_t) { return verify_extension_lemma_corrected(); }},
        {"lemma-asquare",
         "850 non-rich binary words of length 12; those lacking aa or bb have palindrome set A, B, C "
         "or D",
         [](std::size_t j) { return verify_lemma_asquare(j); }},
        {"pal-length-bounds",
         "every long binary word has a palindrome longer than 3; (aabbab)^infinity peaks at 4; the "
         "two-connector word keeps 15 palindromes with longest 5",
         [](std::size_t) { return verify_pal_length_bounds(); }},
        {"lemma-finite", "the bbaa/aabb reversal-closure word has exactly 13 palindromes and is closed under reversal",
         [](std::size_t) { return verify_lemma_finite(); }},
        {"minpal-binary-9", "minimum palindrome count over binary words of length 9 is 9",
         [](std::size_t j) { return minpal_scan(Alphabet(2), {}, 9, 9, j); }},
        {"minpal-binary-12", "minimum palindrome count over binary words of length 12 is 9",
         [](std::size_t j) { return minpal_scan(Alphabet(2), {}, 12, 9, j); }},
        {"minpal-ternary-9", "minimum palindrome count over ternary words of length 9 is 4",
         [](std::size_t j) { return minpal_scan(Alphabet(3), {}, 9, 4, j); }},
    };
    for (auto make : {returns_abaaab_claim, returns_baabaab_claim, returns_ababa_claim, returns_baaab_claim}) {
      const ClaimInstance instance = make();
      m.push_back({instance.claim_id, instance.statement,
                   [instance](std::size_t) { return check_claim(instance, 36); }});
    }
    for (const auto& e : stream_expectations()) {
      m.push_back({e.claim_id,
                   "stream " + e.preset + ": " + std::to_string(e.count) + " palindromes" +
                       (e.missing_reversal_of ? ", not closed under reversal" : ", closed under reversal"),
                   [e](std::size_t) { return verify_stream(e); }});
    }
    // The minpal verdict ids carry the scan parameters; rename to the manifest ids.
    for (auto& info : m) {
      if (info.id.starts_with("minpal-")) {
        info.run = [id = info.id, run = info.run](std::size_t j) {
          auto v = run(j);
          v.claim_id = id;
          return v;
        };
      }
    }
    std::sort(m.begin(), m.end(), [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return m;
  }();
  return manifest;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const auto& c : claim_manifest()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<ClaimVerdict> verify_all(std::size_t jobs) {
  const auto& manifest = claim_manifest();
  std::vector<ClaimVerdict> out(manifest.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, manifest.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const auto i = next.fetch_add(1);
        if (i >= manifest.size()) return;
        out[i] = manifest[i].run(1);
      }
    });
  }
  for (auto& t : workers) t.join();
  return out;
}

}  // namespace palwords
