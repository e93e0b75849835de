#include "palwords/serialize.hpp"

#include <fstream>
#include <sstream>

namespace palwords {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

Word word_of(const Json& j, Alphabet a) {
  if (!j.is_string()) throw FormatError("word must be a string");
  return Word::parse(j.get<std::string>(), a);
}

Json words_json(const WordSet& s) {
  Json out = Json::array();
  for (const auto& w : s) out.push_back(w.str());
  return out;
}

Json words_json(const std::vector<Word>& s) {
  Json out = Json::array();
  for (const auto& w : s) out.push_back(w.str());
  return out;
}

Alphabet alphabet_of(const Json& j) { return Alphabet(get<std::size_t>(j, "alphabet")); }

std::string joined(const WordSet& s) {
  std::string out;
  for (const auto& w : s) {
    if (!out.empty()) out += ' ';
    out += w.empty() ? "ε" : w.str();
  }
  return out;
}

}  // namespace

Json to_json(const PalReport& r) {
  Json j;
  j["kind"] = "pal_report";
  j["alphabet"] = r.longest.alphabet().size();
  j["word_length"] = r.word_length;
  j["count"] = r.count();
  j["longest"] = r.longest.str();
  j["palindromes"] = words_json(r.palindromes);
  Json per = Json::object();
  for (const auto& [len, n] : r.per_length) per[std::to_string(len)] = n;
  j["per_length"] = per;
  return j;
}

PalReport pal_report_from_json(const Json& j) {
  const Alphabet a = alphabet_of(j);
  PalReport r;
  r.word_length = get<std::size_t>(j, "word_length");
  r.longest = word_of(field(j, "longest"), a);
  for (const auto& w : field(j, "palindromes")) r.palindromes.insert(word_of(w, a));
  for (const auto& [len, n] : field(j, "per_length").items()) {
    r.per_length[std::stoul(len)] = n.get<std::size_t>();
  }
  if (get<std::size_t>(j, "count") != r.count()) throw FormatError("count does not match palindromes");
  return r;
}

Json to_json(const ClaimVerdict& v) {
  Json j;
  j["kind"] = "claim_verdict";
  j["claim_id"] = v.claim_id;
  j["status"] = std::string(to_string(v.status));
  Json bound = Json::object();
  for (const auto& [k, val] : v.bound) bound[k] = val;
  j["bound"] = bound;
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"role", w.role}, {"word", w.word}, {"note", w.note}});
  j["witnesses"] = witnesses;
  j["metrics"] = v.metrics;
  j["stats"] = {{"words_scanned", v.stats.words_scanned}, {"elapsed_ms", v.stats.elapsed_ms}};
  return j;
}

ClaimVerdict claim_verdict_from_json(const Json& j) {
  ClaimVerdict v;
  v.claim_id = get<std::string>(j, "claim_id");
  try {
    v.status = status_from_string(get<std::string>(j, "status"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  for (const auto& [k, val] : field(j, "bound").items()) v.bound.emplace_back(k, val.get<std::string>());
  for (const auto& w : field(j, "witnesses")) {
    v.witnesses.push_back({get<std::string>(w, "role"), get<std::string>(w, "word"), get<std::string>(w, "note")});
  }
  for (const auto& [k, val] : field(j, "metrics").items()) v.metrics[k] = val.get<std::int64_t>();
  const Json& stats = field(j, "stats");
  v.stats.words_scanned = get<std::uint64_t>(stats, "words_scanned");
  v.stats.elapsed_ms = get<double>(stats, "elapsed_ms");
  return v;
}

Json to_json(const ClosureReport& r) {
  Json j;
  j["kind"] = "closure_report";
  const std::size_t k = r.witness_missing.empty() ? 2 : r.witness_missing.front().factor.alphabet().size();
  j["alphabet"] = k;
  j["horizon_k"] = r.horizon_k;
  j["horizon"] = r.horizon;
  j["closed_up_to"] = r.closed_up_to;
  Json missing = Json::array();
  for (const auto& m : r.witness_missing) missing.push_back({{"factor", m.factor.str()}, {"reversal", m.reversal.str()}});
  j["witness_missing"] = missing;
  return j;
}

ClosureReport closure_report_from_json(const Json& j) {
  const Alphabet a = alphabet_of(j);
  ClosureReport r;
  r.horizon_k = get<std::size_t>(j, "horizon_k");
  r.horizon = get<std::size_t>(j, "horizon");
  r.closed_up_to = get<std::size_t>(j, "closed_up_to");
  for (const auto& m : field(j, "witness_missing")) {
    r.witness_missing.push_back({word_of(field(m, "factor"), a), word_of(field(m, "reversal"), a)});
  }
  return r;
}

Json to_json(const StabilizedPalSet& s) {
  Json j = to_json(s.report);
  j["kind"] = "stabilized_pal_set";
  j["stable_horizon"] = s.stable_horizon;
  j["checked_horizon"] = s.checked_horizon;
  j["unstable_at_cap"] = s.unstable_at_cap;
  return j;
}

StabilizedPalSet stabilized_from_json(const Json& j) {
  StabilizedPalSet s;
  s.report = pal_report_from_json(j);
  s.stable_horizon = get<std::size_t>(j, "stable_horizon");
  s.checked_horizon = get<std::size_t>(j, "checked_horizon");
  s.unstable_at_cap = get<bool>(j, "unstable_at_cap");
  return s;
}

Json to_json(const FirstReturns& f, const Word& anchor) {
  Json j;
  j["kind"] = "first_returns";
  j["alphabet"] = anchor.alphabet().size();
  j["anchor"] = anchor.str();
  j["anchor_found"] = f.anchor_found;
  j["returns"] = words_json(f.returns);
  return j;
}

FirstReturns first_returns_from_json(const Json& j) {
  const Alphabet a = alphabet_of(j);
  FirstReturns f;
  f.anchor_found = get<bool>(j, "anchor_found");
  for (const auto& w : field(j, "returns")) f.returns.push_back(word_of(w, a));
  return f;
}

std::string render_text(const PalReport& r) {
  std::ostringstream os;
  os << "length: " << r.word_length << "\n"
     << "count: " << r.count() << " (including ε)\n"
     << "longest: " << (r.longest.empty() ? "ε" : r.longest.str()) << " (length " << r.longest.size() << ")\n"
     << "rich: " << (r.richness_defect() == 0 ? "yes" : "no") << "\n"
     << "palindromes: " << joined(r.palindromes) << "\n";
  return os.str();
}

std::string render_text(const StabilizedPalSet& s) {
  std::ostringstream os;
  os << render_text(s.report) << "stable since: " << s.stable_horizon << "\n"
     << "checked up to: " << s.checked_horizon << "\n";
  if (s.unstable_at_cap) os << "warning: set still growing at cap\n";
  return os.str();
}

std::string render_text(const ClosureReport& r) {
  std::ostringstream os;
  os << "k: " << r.horizon_k << ", horizon: " << r.horizon << "\n"
     << "closed up to length: " << r.closed_up_to << "\n";
  if (r.witness_missing.empty()) {
    os << "no missing reversals\n";
  } else {
    os << "missing reversals:\n";
    for (const auto& m : r.witness_missing) os << "  " << m.factor << " (reversal " << m.reversal << " absent)\n";
  }
  return os.str();
}

std::string render_text(const FirstReturns& f, const Word& anchor) {
  std::ostringstream os;
  if (!f.anchor_found) {
    os << "anchor " << anchor << " does not occur\n";
    return os.str();
  }
  os << "complete first returns to " << anchor << ": " << f.returns.size() << "\n";
  for (const auto& r : f.returns) os << "  " << r << "\n";
  return os.str();
}

std::string render_text(const ClaimVerdict& v) {
  std::ostringstream os;
  os << v.claim_id << ": " << to_string(v.status) << "\n";
  if (!v.bound.empty()) {
    os << "  bound:";
    for (const auto& [k, val] : v.bound) os << " " << k << "=" << val;
    os << "\n";
  }
  for (const auto& [k, val] : v.metrics) os << "  " << k << " = " << val << "\n";
  for (const auto& w : v.witnesses) {
    os << "  [" << w.role << "] " << (w.word.empty() ? "ε" : w.word);
    if (!w.note.empty()) os << "  " << w.note;
    os << "\n";
  }
  os << "  scanned " << v.stats.words_scanned << " in " << static_cast<long long>(v.stats.elapsed_ms) << " ms\n";
  return os.str();
}

std::vector<Word> read_word_file(const std::filesystem::path& path, std::optional<Alphabet> alphabet) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  std::string symbols;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
    symbols += lines.back();
  }
  const Alphabet a = alphabet ? *alphabet : Word::parse(symbols).alphabet();
  std::vector<Word> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(Word::parse(l, a));
  return out;
}

}  // namespace palwords
