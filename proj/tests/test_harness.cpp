#include <doctest.h>

#include "oracles.hpp"
#include "palwords/generators.hpp"
#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"

using namespace palwords;

namespace {

Word w2(std::string_view s) { return Word::parse(s, Alphabet(2)); }

// Independent check of a constraint set on a complete word, string based.
bool oracle_admits(const ConstraintSet& c, const std::string& w) {
  for (const auto& f : c.forbidden_factors) {
    if (w.find(f.str()) != std::string::npos) return false;
  }
  for (const auto& r : c.required_factors) {
    if (w.find(r.str()) == std::string::npos) return false;
  }
  std::set<std::string> pals = oracle::pal_set(w);
  for (const auto& p : pals) {
    if (c.pal_length_cap && p.size() > *c.pal_length_cap) return false;
    if (const auto it = c.length_whitelist.find(p.size()); it != c.length_whitelist.end()) {
      if (!oracle::strings(it->second).contains(p)) return false;
    }
  }
  for (const auto& a : c.assumed_palindromes) pals.insert(a.str());
  return !c.pal_budget || pals.size() <= *c.pal_budget;
}

std::string container_of(const Witness& w) {
  const auto at = w.note.rfind("occurs in ");
  REQUIRE(at != std::string::npos);
  return w.note.substr(at + 10);
}

std::vector<ConstraintSet> sample_constraints() {
  std::vector<ConstraintSet> out;
  for (auto make : {returns_abaaab_claim, returns_baabaab_claim, returns_ababa_claim, returns_baaab_claim,
                    returns_baaab_any_length5_claim}) {
    out.push_back(make().constraints);
  }
  ConstraintSet cap;
  cap.pal_length_cap = 3;
  out.push_back(cap);
  ConstraintSet budget;
  budget.pal_budget = 9;
  budget.forbidden_factors = {w2("aaa")};
  out.push_back(budget);
  ConstraintSet plain;
  plain.required_factors = {w2("abba"), w2("baab")};
  plain.pal_budget = 10;
  out.push_back(plain);
  return out;
}

}  // namespace

TEST_CASE("word enumeration") {
  std::vector<std::string> all;
  for (const auto& w : enumerate_words(Alphabet(2), 2)) all.push_back(w.str());
  CHECK(all == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  std::vector<std::string> classes;
  for (const auto& w : enumerate_words(Alphabet(2), 2, Dedupe::iso_class)) classes.push_back(w.str());
  CHECK(classes == std::vector<std::string>{"aa", "ab"});
  std::size_t n9 = 0;
  for (const auto& w : enumerate_words(Alphabet(2), 9)) n9 += w.size() == 9;
  CHECK(n9 == 512);
  std::size_t n0 = 0;
  for (const auto& w : enumerate_words(Alphabet(3), 0)) n0 += w.empty();
  CHECK(n0 == 1);
  try {
    (void)enumerate_words(Alphabet(2), 27);
    FAIL("expected the guard to trip");
  } catch (const EnumerationGuardExceeded& e) {
    CHECK(std::string(e.what()).find("2^27") != std::string::npos);
  }
  CHECK_NOTHROW((void)enumerate_words(Alphabet(2), 26));
}

TEST_CASE("dedupe yields one word per class") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> reps;
    for (const auto& w : enumerate_words(Alphabet(3), n, Dedupe::iso_class)) reps.insert(w.str());
    std::set<std::string> expected;
    for (const auto& u : oracle::all_words(3, n)) expected.insert(*oracle::class_members(u, 3).begin());
    REQUIRE(reps == expected);
  }
}

TEST_CASE("scan visits exactly the words within budget") {
  for (std::size_t budget : {7u, 9u, 10u}) {
    std::set<std::string> got;
    std::mutex m;
    scan_words(Alphabet(2), 12, {3, budget}, [&](std::size_t worker, const Word& w, const PalTree& tree) {
      REQUIRE(worker < 3);
      REQUIRE(tree.text() == w);
      std::lock_guard lock(m);
      got.insert(w.str());
    });
    std::set<std::string> expected;
    for (const auto& u : oracle::all_words(2, 12)) {
      if (oracle::pal_set(u).size() <= budget) expected.insert(u);
    }
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(scan_words(Alphabet(2), 30, {}, [](std::size_t, const Word&, const PalTree&) {}),
                  EnumerationGuardExceeded);
}

TEST_CASE("constraint checks agree with an independent oracle") {
  const auto sets = sample_constraints();
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& u : oracle::all_words(2, n)) {
      for (const auto& c : sets) REQUIRE(admits(c, w2(u)) == oracle_admits(c, u));
    }
  }
}

TEST_CASE("pruned search finds exactly the admitted words: naive oracle to 16") {
  for (const auto& c : sample_constraints()) {
    std::set<std::string> pruned;
    for (const auto& w : admitted_words(c, 16)) pruned.insert(w.str());
    std::set<std::string> naive;
    for (std::size_t n = 0; n <= 16; ++n) {
      for (const auto& u : oracle::all_words(2, n)) {
        if (oracle_admits(c, u)) naive.insert(u);
      }
    }
    REQUIRE(pruned == naive);
  }
}

TEST_CASE("pruned search finds exactly the admitted words: unpruned scan to 20") {
  const auto sets = sample_constraints();
  std::vector<std::set<Word>> unpruned(sets.size());
  // Unpruned: every word of every length, each constraint checked in full
  // against the word's complete palindrome set.
  for (std::size_t n = 0; n <= 20; ++n) {
    scan_words(Alphabet(2), n, {1, std::nullopt}, [&](std::size_t, const Word& w, const PalTree& tree) {
      const PalReport r = make_report(tree);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const ConstraintSet& c = sets[i];
        bool ok = std::none_of(c.forbidden_factors.begin(), c.forbidden_factors.end(),
                               [&](const Word& f) { return w.contains(f); }) &&
                  std::all_of(c.required_factors.begin(), c.required_factors.end(),
                              [&](const Word& f) { return w.contains(f); });
        std::size_t total = r.count();
        for (const auto& p : r.palindromes) {
          if (!ok) break;
          if (c.pal_length_cap && p.size() > *c.pal_length_cap) ok = false;
          if (const auto it = c.length_whitelist.find(p.size()); it != c.length_whitelist.end()) {
            ok = ok && it->second.contains(p);
          }
        }
        for (const auto& a : c.assumed_palindromes) total += !r.palindromes.contains(a);
        if (ok && (!c.pal_budget || total <= *c.pal_budget)) unpruned[i].insert(w);
      }
    });
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto pruned = admitted_words(sets[i], 20);
    REQUIRE(std::set<Word>(pruned.begin(), pruned.end()) == unpruned[i]);
    for (const auto& w : pruned) REQUIRE(admits(sets[i], w));
  }
}

TEST_CASE("family templates") {
  const FamilyTemplate f{"x", w2("baaab"), w2("baabab"), w2("baaab"), 1, std::nullopt};
  CHECK(f.repeats_in(w2("baaabbaababbaaab")) == 1u);
  CHECK(f.repeats_in(w2("baaabbaaab")) == 0u);
  CHECK_FALSE(f.in_range(0));
  CHECK(f.instance(2).str() == "baaabbaababbaababbaaab");
  CHECK_FALSE(f.repeats_in(w2("baaabab")).has_value());
  const FamilyTemplate empty{"bad", w2("a"), Word(Alphabet(2)), w2("a"), 0, std::nullopt};
  CHECK_THROWS_AS((void)empty.repeats_in(w2("aa")), std::invalid_argument);
  ClaimInstance claim = returns_baaab_claim();
  claim.families.push_back(empty);
  CHECK_THROWS_AS(check_claim(claim, 10), std::invalid_argument);
}

TEST_CASE("first-return claims hold up to length 36") {
  for (auto make : {returns_abaaab_claim, returns_baabaab_claim, returns_ababa_claim, returns_baaab_claim}) {
    const ClaimInstance claim = make();
    CAPTURE(claim.claim_id);
    const ClaimVerdict v = check_claim(claim, 36);
    CHECK(v.status == Status::verified_up_to_bound);
    CHECK(v.counterexample_count() == 0);
    CHECK(v.metric("returns_found") > 0);
    CHECK(v.metric("returns_found") == v.metric("returns_matched"));
    CHECK(v.bound.front() == std::pair<std::string, std::string>{"max_length", "36"});
  }
  const ClaimVerdict v = check_claim(returns_abaaab_claim(), 36);
  CHECK(v.has_witness("return", "abaaabbabaaab"));
  CHECK(v.has_witness("return", "abaaabbabaabbabaaab"));
}

TEST_CASE("allowing other length-5 palindromes refutes with replayable witnesses") {
  const ClaimInstance weak = returns_baaab_any_length5_claim();
  const ClaimVerdict v = check_claim(weak, 36);
  REQUIRE(v.status == Status::refuted);
  REQUIRE(v.counterexample_count() > 0);
  CHECK(v.has_witness("counterexample", "baaabaabbabaaab"));
  for (const auto& w : v.witnesses) {
    if (w.role != "counterexample") continue;
    const Word container = w2(container_of(w));
    CHECK(replay_claim_witness(weak, container, w2(w.word)));
    // the same container is rejected by the full claim
    CHECK_FALSE(admits(returns_baaab_claim().constraints, container));
  }
  // a matching return does not replay as a violation
  CHECK_FALSE(replay_claim_witness(returns_baaab_claim(), w2("abaaabbabaaab"), w2("baaabbabaaab")));
}

TEST_CASE("dropping only the bbb restriction changes nothing") {
  // bbb would have to be followed or preceded by a, making abbba or bbbb.
  const ClaimVerdict v = check_claim(returns_baaab_without_bbb_claim(), 36);
  CHECK(v.status == Status::verified_up_to_bound);
  CHECK(v.metric("returns_found") == check_claim(returns_baaab_claim(), 36).metric("returns_found"));
}

TEST_CASE("dropping the assumed palindromes refutes") {
  for (auto make : {returns_baabaab_claim, returns_ababa_claim, returns_baaab_claim}) {
    ClaimInstance claim = make();
    claim.constraints.assumed_palindromes.clear();
    const ClaimVerdict v = check_claim(claim, 30);
    CAPTURE(claim.claim_id);
    CHECK(v.status == Status::refuted);
    for (const auto& w : v.witnesses) {
      if (w.role == "counterexample") CHECK(replay_claim_witness(claim, w2(container_of(w)), w2(w.word)));
    }
  }
}

TEST_CASE("pal length bounds") {
  ConstraintSet c;
  c.pal_length_cap = 3;
  const auto words = admitted_words(c, 40);
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  CHECK(longest == 8);
  CHECK(words.size() == 53);
  CHECK(std::find(words.begin(), words.end(), w2("bbbabaaa")) != words.end());
}

TEST_CASE("minpal scans") {
  const auto b9 = minpal_scan(Alphabet(2), {}, 9, 9);
  CHECK(b9.status == Status::verified_up_to_bound);
  CHECK(b9.metric("min_count") == 9);
  CHECK(b9.has_witness("argmin", "aababbaab"));
  const auto b12 = minpal_scan(Alphabet(2), {}, 12, 9);
  CHECK(b12.metric("min_count") == 9);
  CHECK(b12.has_witness("argmin", "aababbaababb"));
  CHECK(b12.has_witness("argmin", "bbabaabbabaa"));
  CHECK(b12.metric("argmin_count") == 12);
  const auto t9 = minpal_scan(Alphabet(3), {}, 9, 4);
  CHECK(t9.metric("min_count") == 4);
  for (const auto& w : t9.witnesses) {
    const Word x = Word::parse(w.word, Alphabet(3));
    CHECK(least_period(x) == 3);
    CHECK(x.distinct_letters() == 3);
  }
  const auto wrong = minpal_scan(Alphabet(2), {}, 9, 8);
  CHECK(wrong.status == Status::refuted);
  const auto sq = minpal_scan(Alphabet(2), WordClass::parse("squares"), 10);
  CHECK(sq.metric("min_count") >= 9);
  const auto closed = minpal_scan(Alphabet(2), WordClass::parse("closure:3"), 12);
  CHECK(closed.metric("min_count") >= 9);
  CHECK_THROWS(WordClass::parse("closure:"));
  CHECK_THROWS(WordClass::parse("nonsense"));
  CHECK(WordClass::parse("closure:4").str() == "closure:4");
}

TEST_CASE("word classes") {
  const WordClass sq = WordClass::parse("squares");
  CHECK(sq.contains(w2("aabb")));
  CHECK_FALSE(sq.contains(w2("abab")));
  const WordClass cl = WordClass::parse("closure:2");
  CHECK(cl.contains(w2("abba")));
  CHECK_FALSE(cl.contains(w2("aab")));
}

TEST_CASE("reference sets") {
  CHECK(nine_palindrome_set().size() == 9);
  for (const auto& [name, set] : asquare_reference_sets()) {
    CAPTURE(name);
    CHECK(set.size() == 12);
    for (const auto& p : set) CHECK(p.is_palindrome());
  }
  CHECK(lemma_finite_palindrome_set().size() == 13);
  CHECK(prop56_palindrome_set().size() == 15);
}

TEST_CASE("ten-palindrome classes") {
  const auto lit = ten_palindrome_classes(false);
  CHECK(lit.t1.contains(w2("aaababbaaababb")));
  CHECK(pal_count(w2("aaababbaaababb")) == 10);
  CHECK(lit.t1 == lit.t2);
  CHECK(lit.t3 == word_set({"aaababbaababba", "bbbabaabbabaab"}));
  CHECK(lit.t4 == word_set({"aababbaababbab", "bbabaabbabaaba"}));
  const auto rot = ten_palindrome_classes(true);
  CHECK(rot.t1.size() == 28);
  CHECK(rot.t3.size() == 12);
  CHECK(rot.t4.size() == 12);
  for (const auto* s : {&rot.t1, &rot.t2, &rot.t3, &rot.t4}) {
    for (const auto& w : *s) REQUIRE(pal_count(w) == 10);
  }
}

TEST_CASE("verifier outcomes") {
  CHECK(verify_lemma_rich().status == Status::verified);
  CHECK(verify_min4_general().metric("exactly_four_len12") == 24);
  CHECK(verify_lemma_asquare().metric("non_rich_words") == 850);
  CHECK(verify_prop_9_conjugates().status == Status::verified);
  CHECK(classify_prop_10_conjugates().status == Status::verified);
  CHECK(verify_extension_lemma_corrected().status == Status::verified);
  CHECK(verify_lemma_finite().status == Status::verified_up_to_bound);
  CHECK(verify_pal_length_bounds().metric("longest_word_without_pal_gt3") == 8);

  const auto p9 = verify_prop_9();
  CHECK(p9.status == Status::refuted);
  CHECK(p9.metric("nine_palindrome_words") == 12);
  CHECK(p9.counterexample_count() == 10);
  for (const auto& w : p9.witnesses) {
    if (w.role == "counterexample") CHECK(pal_count(w2(w.word)) == 9);
  }
  const auto ext = verify_extension_lemma();
  CHECK(ext.status == Status::refuted);
  CHECK(ext.metric("item3_failures") == 2);
  CHECK(ext.metric("item1_failures") == 0);
  CHECK(ext.metric("period7_extensions") == ext.metric("period7_extensions_with_ten"));
}

TEST_CASE("verdicts carry witnesses consistent with their status") {
  for (const auto& v : verify_all(4)) {
    CAPTURE(v.claim_id);
    if (v.status == Status::refuted) {
      CHECK(v.counterexample_count() > 0);
    } else {
      CHECK(v.counterexample_count() == 0);
    }
    if (v.status == Status::verified_up_to_bound) CHECK_FALSE(v.bound.empty());
  }
}

TEST_CASE("scans are independent of the worker count") {
  CHECK(same_outcome(verify_lemma_rich(1), verify_lemma_rich(4)));
  CHECK(same_outcome(verify_lemma_asquare(1), verify_lemma_asquare(3)));
  CHECK(same_outcome(verify_prop_9(1), verify_prop_9(4)));
  CHECK(same_outcome(classify_prop_10(1), classify_prop_10(4)));
  CHECK(same_outcome(minpal_scan(Alphabet(3), {}, 8, 4, 1), minpal_scan(Alphabet(3), {}, 8, 4, 5)));
  CHECK(same_outcome(verify_min4_general(1), verify_min4_general(4)));
}

TEST_CASE("verifiers are idempotent") {
  CHECK(same_outcome(verify_pal_length_bounds(), verify_pal_length_bounds()));
  CHECK(same_outcome(check_claim(returns_baaab_claim()), check_claim(returns_baaab_claim())));
  const auto a = verify_all(1);
  const auto b = verify_all(6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_outcome(a[i], b[i]));
}

TEST_CASE("manifest") {
  const auto& m = claim_manifest();
  CHECK(m.size() == 23);
  CHECK(std::is_sorted(m.begin(), m.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
  for (const auto& info : m) CHECK(find_claim(info.id) == &info);
  CHECK(find_claim("nope") == nullptr);
  const auto all = verify_all(3);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(all[i].claim_id == m[i].id);
}
