// palwords: palindromic factors of finite words and generated streams, and
// exhaustive verifiers for finite statements about them.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palwords/generators.hpp"
#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"
#include "palwords/serialize.hpp"

using namespace palwords;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json };

struct Common {
  std::string format = "text";
  std::size_t jobs = 1;
  [[nodiscard]] Format fmt() const { return format == "text" ? Format::text : Format::json; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Word parse_word(const std::string& text, std::optional<std::size_t> alphabet) {
  return alphabet ? Word::parse(text, Alphabet(*alphabet)) : Word::parse(text);
}

// Filter expressions for `enumerate`: comma-separated terms.
//   pal<=N pal>=N pal==N pal<N pal>N   distinct palindromes (with ε)
//   longest<=N longest>=N              longest palindrome length
//   rich nonrich all-letters squares closure:M
struct Filter {
  struct Term {
    std::string key;
    std::string op;
    std::size_t value = 0;
    WordClass cls;
  };
  std::vector<Term> terms;
  std::optional<std::size_t> pal_budget;

  static Filter parse(const std::string& text) {
    Filter f;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      auto next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const std::string term = text.substr(pos, next - pos);
      pos = next + 1;
      if (term.empty()) continue;
      if (term == "rich" || term == "nonrich" || term == "all-letters") {
        f.terms.push_back({term, "", 0, {}});
      } else if (term == "squares" || term.starts_with("closure:")) {
        f.terms.push_back({"class", "", 0, WordClass::parse(term)});
      } else {
        Term t;
        for (const char* key : {"pal", "longest"}) {
          if (term.starts_with(key)) t.key = key;
        }
        if (t.key.empty()) throw UsageError("unknown filter term '" + term + "'");
        std::string rest = term.substr(t.key.size());
        for (const char* op : {"<=", ">=", "==", "<", ">"}) {
          if (rest.starts_with(op)) {
            t.op = op;
            break;
          }
        }
        const std::string digits = rest.substr(t.op.size());
        const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.value);
        if (t.op.empty() || digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
          throw UsageError("bad filter term '" + term + "'");
        }
        if (t.key == "pal" && (t.op == "<=" || t.op == "==" || t.op == "<")) {
          const std::size_t cap = t.op == "<" ? (t.value == 0 ? 0 : t.value - 1) : t.value;
          f.pal_budget = f.pal_budget ? std::min(*f.pal_budget, cap) : cap;
        }
        f.terms.push_back(t);
      }
      if (next == text.size()) break;
    }
    return f;
  }

  static bool compare(std::size_t a, const std::string& op, std::size_t b) {
    if (op == "<=") return a <= b;
    if (op == ">=") return a >= b;
    if (op == "==") return a == b;
    if (op == "<") return a < b;
    return a > b;
  }

  [[nodiscard]] bool accepts(const Word& w, const PalTree& tree) const {
    const std::size_t count = tree.distinct_palindromes() + 1;
    for (const auto& t : terms) {
      if (t.key == "pal" && !compare(count, t.op, t.value)) return false;
      if (t.key == "longest" && !compare(tree.max_length(), t.op, t.value)) return false;
      if (t.key == "rich" && count != w.size() + 1) return false;
      if (t.key == "nonrich" && count == w.size() + 1) return false;
      if (t.key == "all-letters" && w.distinct_letters() != w.alphabet().size()) return false;
      if (t.key == "class" && !t.cls.contains(w)) return false;
    }
    return true;
  }
};

PrefixStream stream_or_usage(const std::string& ref) {
  try {
    return resolve_stream(ref);
  } catch (const UnknownGenerator& e) {
    std::string msg = e.what();
    // unknown presets already carry the listing
    if (msg.find("known presets:") == std::string::npos) msg += "\n" + preset_listing();
    throw UsageError(msg);
  }
}

// Subcommands -------------------------------------------------------------------

struct PalArgs {
  std::string word, gen, file;
  std::optional<std::size_t> horizon, alphabet;
};

int run_pal(const PalArgs& a, const Common& c) {
  const int sources = !a.word.empty() + !a.gen.empty() + !a.file.empty();
  if (sources != 1) throw UsageError("pal needs exactly one of --word, --gen, --file");
  if (!a.gen.empty()) {
    const PrefixStream s = stream_or_usage(a.gen);
    if (a.horizon) {
      const PalReport r = pal_set(s.prefix(*a.horizon));
      if (c.fmt() == Format::json) {
        Json j = to_json(r);
        j["generator"] = s.describe();
        emit(j);
      } else {
        std::cout << "generator: " << s.describe() << "\nprefix: " << *a.horizon << "\n" << render_text(r);
      }
    } else {
      const StabilizedPalSet st = stabilized_pal_set(s);
      if (c.fmt() == Format::json) {
        Json j = to_json(st);
        j["generator"] = s.describe();
        emit(j);
      } else {
        std::cout << "generator: " << s.describe() << "\n" << render_text(st);
      }
    }
    return kOk;
  }
  std::vector<Word> words;
  if (!a.word.empty()) {
    words.push_back(parse_word(a.word, a.alphabet));
  } else {
    words = read_word_file(a.file, a.alphabet ? std::optional(Alphabet(*a.alphabet)) : std::nullopt);
  }
  Json all = Json::array();
  for (const auto& w : words) {
    const PalReport r = pal_set(w);
    if (c.fmt() == Format::json) {
      Json j = to_json(r);
      j["word"] = w.str();
      all.push_back(std::move(j));
    } else {
      std::cout << "word: " << w << "\n" << render_text(r);
      if (words.size() > 1) std::cout << "\n";
    }
  }
  if (c.fmt() == Format::json) emit(words.size() == 1 && a.file.empty() ? all[0] : all);
  return kOk;
}

int run_closure(const std::string& gen, std::size_t k, std::size_t horizon, const Common& c) {
  const PrefixStream s = stream_or_usage(gen);
  const ClosureReport r = reversal_closure_check(s, k, horizon);
  if (c.fmt() == Format::json) {
    Json j = to_json(r);
    j["generator"] = s.describe();
    emit(j);
  } else {
    std::cout << "generator: " << s.describe() << "\n" << render_text(r);
  }
  return kOk;
}

int run_returns(const PalArgs& a, const std::string& anchor_text, const Common& c) {
  if (a.word.empty() == a.gen.empty()) throw UsageError("returns needs exactly one of --word, --gen");
  Word w;
  if (!a.word.empty()) {
    w = parse_word(a.word, a.alphabet);
  } else {
    w = stream_or_usage(a.gen).prefix(a.horizon.value_or(4096));
  }
  const Word anchor = Word::parse(anchor_text, w.alphabet());
  const FirstReturns f = complete_first_returns(w, anchor);
  if (c.fmt() == Format::json) {
    emit(to_json(f, anchor));
  } else {
    std::cout << render_text(f, anchor);
  }
  return kOk;
}

int run_gen(const std::string& gen, std::size_t length, bool list, const Common& c) {
  if (list) {
    if (c.fmt() == Format::json) {
      Json j = Json::array();
      for (const auto& p : presets()) j.push_back({{"name", p.name}, {"spec", p.spec}, {"description", p.description}});
      emit(j);
    } else {
      std::cout << preset_listing();
    }
    return kOk;
  }
  if (gen.empty()) throw UsageError("gen needs a generator name or spec (or --list)");
  const PrefixStream s = stream_or_usage(gen);
  const Word p = s.prefix(length);
  if (c.fmt() == Format::json) {
    emit({{"kind", "prefix"}, {"generator", s.describe()}, {"length", length}, {"prefix", p.str()}});
  } else {
    std::cout << p << "\n";
  }
  return kOk;
}

int run_verify(const std::vector<std::string>& ids, bool list, const Common& c) {
  if (list) {
    if (c.fmt() == Format::json) {
      Json j = Json::array();
      for (const auto& info : claim_manifest()) j.push_back({{"claim_id", info.id}, {"statement", info.statement}});
      emit(j);
    } else {
      for (const auto& info : claim_manifest()) std::cout << info.id << "\n    " << info.statement << "\n";
    }
    return kOk;
  }
  if (ids.empty()) throw UsageError("verify needs a claim id, 'all', or --list");
  std::vector<ClaimVerdict> verdicts;
  if (ids.size() == 1 && ids[0] == "all") {
    verdicts = verify_all(c.jobs);
  } else {
    for (const auto& id : ids) {
      const ClaimInfo* info = find_claim(id);
      if (!info) {
        std::string known;
        for (const auto& i : claim_manifest()) known += "  " + i.id + "\n";
        throw UsageError("unknown claim '" + id + "'\n\nknown claims:\n" + known);
      }
      verdicts.push_back(info->run(c.jobs));
    }
  }
  std::size_t refuted = 0;
  for (const auto& v : verdicts) refuted += v.status == Status::refuted;
  if (c.fmt() == Format::json) {
    if (verdicts.size() == 1) {
      emit(to_json(verdicts[0]));
    } else {
      Json arr = Json::array();
      for (const auto& v : verdicts) arr.push_back(to_json(v));
      emit({{"kind", "verification_run"}, {"claims", verdicts.size()}, {"refuted", refuted}, {"verdicts", arr}});
    }
  } else {
    for (const auto& v : verdicts) std::cout << render_text(v);
    if (verdicts.size() > 1) std::cout << verdicts.size() << " claims, " << refuted << " refuted\n";
  }
  return refuted ? kRefuted : kOk;
}

int run_enumerate(std::size_t k, std::size_t n, const std::string& filter_text, bool dedupe, const Common& c) {
  const Alphabet alphabet(k);
  const Filter filter = Filter::parse(filter_text);
  std::vector<std::pair<Word, std::size_t>> hits;
  std::mutex m;
  const std::uint64_t scanned =
      scan_words(alphabet, n, {c.jobs, filter.pal_budget}, [&](std::size_t, const Word& w, const PalTree& tree) {
        if (dedupe && IsoClass(w).canonical() != w) return;
        if (!filter.accepts(w, tree)) return;
        std::lock_guard lock(m);
        hits.emplace_back(w, tree.distinct_palindromes() + 1);
      });
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return ShortLex{}(a.first, b.first); });
  if (c.fmt() == Format::json) {
    Json words = Json::array();
    for (const auto& [w, count] : hits) words.push_back({{"word", w.str()}, {"palindromes", count}});
    emit({{"kind", "enumeration"},
          {"alphabet", k},
          {"length", n},
          {"filter", filter_text},
          {"dedupe", dedupe ? "iso-class" : "none"},
          {"scanned", scanned},
          {"matches", hits.size()},
          {"words", words}});
  } else {
    for (const auto& [w, count] : hits) std::cout << w << " " << count << "\n";
    std::cerr << hits.size() << " of " << scanned << " scanned words match\n";
  }
  return kOk;
}

int run_minpal(std::size_t k, std::size_t n, const std::string& cls, std::optional<std::size_t> expected,
               const Common& c) {
  const ClaimVerdict v = minpal_scan(Alphabet(k), WordClass::parse(cls), n, expected, c.jobs);
  if (c.fmt() == Format::json) {
    emit(to_json(v));
  } else {
    std::cout << render_text(v);
  }
  return v.status == Status::refuted ? kRefuted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palwords: palindromic factors, generated words and bounded claim checks"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "text, json or structured")
        ->check(CLI::IsMember({"text", "json", "structured"}));
    sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  PalArgs pal;
  auto* pal_cmd = app.add_subcommand("pal", "distinct palindromic factors of a word or stream");
  pal_cmd->add_option("--word", pal.word, "word over a-h");
  pal_cmd->add_option("--gen", pal.gen, "preset name or generator spec");
  pal_cmd->add_option("--file", pal.file, "file with one word per line")->check(CLI::ExistingFile);
  pal_cmd->add_option("--horizon", pal.horizon, "fixed prefix length instead of the stabilizer");
  pal_cmd->add_option("--alphabet", pal.alphabet, "alphabet size")->check(CLI::Range(1, 8));
  add_common(pal_cmd);

  std::string closure_gen;
  std::size_t closure_k = 5;
  std::size_t closure_horizon = 4096;
  auto* closure_cmd = app.add_subcommand("closure", "look for factors whose reversal is missing");
  closure_cmd->add_option("--gen", closure_gen, "preset name or generator spec")->required();
  closure_cmd->add_option("--k", closure_k, "largest factor length")->check(CLI::PositiveNumber);
  closure_cmd->add_option("--horizon", closure_horizon, "prefix length searched for reversals");
  add_common(closure_cmd);

  PalArgs ret;
  std::string anchor;
  auto* returns_cmd = app.add_subcommand("returns", "complete first returns to a factor");
  returns_cmd->add_option("--word", ret.word, "word over a-h");
  returns_cmd->add_option("--gen", ret.gen, "preset name or generator spec");
  returns_cmd->add_option("--horizon", ret.horizon, "prefix length for --gen (default 4096)");
  returns_cmd->add_option("--alphabet", ret.alphabet, "alphabet size")->check(CLI::Range(1, 8));
  returns_cmd->add_option("--anchor", anchor, "the factor v")->required();
  add_common(returns_cmd);

  std::string gen_ref;
  std::size_t gen_length = 64;
  bool gen_list = false;
  auto* gen_cmd = app.add_subcommand("gen", "print a prefix of a generated word");
  gen_cmd->add_option("generator", gen_ref, "preset name or generator spec");
  gen_cmd->add_option("--gen", gen_ref, "preset name or generator spec");
  gen_cmd->add_option("--length", gen_length, "prefix length");
  gen_cmd->add_flag("--list", gen_list, "list presets");
  add_common(gen_cmd);

  std::vector<std::string> verify_ids;
  bool verify_list = false;
  auto* verify_cmd = app.add_subcommand("verify", "run built-in claim verifiers");
  verify_cmd->add_option("claims", verify_ids, "claim ids, or 'all'");
  verify_cmd->add_flag("--list", verify_list, "list claim ids");
  add_common(verify_cmd);

  std::size_t enum_k = 2;
  std::size_t enum_n = 0;
  std::string enum_filter;
  bool enum_dedupe = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list words of one length passing a filter");
  enum_cmd->add_option("--alphabet", enum_k, "alphabet size")->check(CLI::Range(1, 8));
  enum_cmd->add_option("--n", enum_n, "word length")->required();
  enum_cmd->add_option("--filter", enum_filter,
                       "comma-separated: pal<=N pal==N longest<=N rich nonrich all-letters squares closure:M");
  enum_cmd->add_flag("--dedupe", enum_dedupe, "one word per isomorphism class");
  add_common(enum_cmd);

  std::size_t mp_k = 2;
  std::size_t mp_n = 0;
  std::string mp_class = "all";
  std::optional<std::size_t> mp_expected;
  auto* minpal_cmd = app.add_subcommand("minpal", "minimum palindrome count over a word class");
  minpal_cmd->add_option("--alphabet", mp_k, "alphabet size")->check(CLI::Range(1, 8));
  minpal_cmd->add_option("--n", mp_n, "word length")->required();
  minpal_cmd->add_option("--class", mp_class, "all, squares or closure:M");
  minpal_cmd->add_option("--expect", mp_expected, "refute unless the minimum equals this");
  add_common(minpal_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*pal_cmd) return run_pal(pal, common);
    if (*closure_cmd) return run_closure(closure_gen, closure_k, closure_horizon, common);
    if (*returns_cmd) return run_returns(ret, anchor, common);
    if (*gen_cmd) return run_gen(gen_ref, gen_length, gen_list, common);
    if (*verify_cmd) return run_verify(verify_ids, verify_list, common);
    if (*enum_cmd) return run_enumerate(enum_k, enum_n, enum_filter, enum_dedupe, common);
    if (*minpal_cmd) return run_minpal(mp_k, mp_n, mp_class, mp_expected, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationGuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}
