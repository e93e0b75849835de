#ifndef PALWORDS_SERIALIZE_HPP
#define PALWORDS_SERIALIZE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "palwords/harness.hpp"
#include "palwords/pal_engine.hpp"

namespace palwords {

using Json = nlohmann::ordered_json;

/// Raised for structurally invalid records.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structured records. Words are written as ASCII strings; the alphabet size
// is stored once per record.

Json to_json(const PalReport& r);
PalReport pal_report_from_json(const Json& j);

Json to_json(const ClaimVerdict& v);
ClaimVerdict claim_verdict_from_json(const Json& j);

Json to_json(const ClosureReport& r);
ClosureReport closure_report_from_json(const Json& j);

Json to_json(const StabilizedPalSet& s);
StabilizedPalSet stabilized_from_json(const Json& j);

Json to_json(const FirstReturns& f, const Word& anchor);
FirstReturns first_returns_from_json(const Json& j);

// Human-readable renderings.

std::string render_text(const PalReport& r);
std::string render_text(const StabilizedPalSet& s);
std::string render_text(const ClosureReport& r);
std::string render_text(const FirstReturns& f, const Word& anchor);
std::string render_text(const ClaimVerdict& v);

/// One word per line; blank lines and lines starting with '#' are skipped.
/// Without an alphabet, the smallest one covering every word is used.
std::vector<Word> read_word_file(const std::filesystem::path& path,
                                 std::optional<Alphabet> alphabet = std::nullopt);

}  // namespace palwords

#endif  // PALWORDS_SERIALIZE_HPP
