#ifndef PALWORDS_GENERATORS_HPP
#define PALWORDS_GENERATORS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "palwords/morphism.hpp"
#include "palwords/stream.hpp"
#include "palwords/word.hpp"

namespace palwords {

/// How the right half of each reversal-closure step is derived from U_n.
enum class ClosureTransform {
  identity,
  reverse,             // U_n reversed
  reverse_complement,  // U_n reversed, then letter i -> (k - 1 - i); a<->b on two letters
};

Word apply_transform(const Word& w, ClosureTransform t);
std::string_view to_string(ClosureTransform t);

/// Eventually periodic sequence of connector words: `head` once, then
/// `cycle` repeated forever.
struct ConnectorSchedule {
  std::vector<Word> head;
  std::vector<Word> cycle;

  [[nodiscard]] const Word& at(std::size_t step) const;
  friend bool operator==(const ConnectorSchedule&, const ConnectorSchedule&) = default;
};

struct GeneratorSpec;
using GeneratorRef = std::shared_ptr<const GeneratorSpec>;

struct PeriodicSpec {
  Word block;
};
/// Limit of f_{n+1} = f_n f_{n-1}, f_0 = b, f_1 = a.
struct FibonacciSpec {};
struct FixedPointSpec {
  Morphism morphism;
  Letter seed;
};
struct ImageSpec {
  Morphism morphism;
  GeneratorRef inner;
};
/// U_{n+1} = U_n . inserts.at(n) . transform(U_n)
struct ReversalClosureSpec {
  Word initial;
  ConnectorSchedule inserts;
  ClosureTransform transform;
};
struct ShiftedSpec {
  GeneratorRef inner;
  std::size_t offset;
};

struct GeneratorSpec {
  std::variant<PeriodicSpec, FibonacciSpec, FixedPointSpec, ImageSpec,
               ReversalClosureSpec, ShiftedSpec>
      node;
};

// Stream constructors ---------------------------------------------------------

/// u^infinity. Throws std::invalid_argument for empty u.
PrefixStream periodic(const Word& u);
PrefixStream fibonacci();
/// Throws std::invalid_argument("not prolongable") unless image(seed)
/// starts with seed and is longer than one letter.
PrefixStream fixed_point(const Morphism& m, Letter seed);
PrefixStream image(const Morphism& m, const PrefixStream& inner);
PrefixStream reversal_closure(const Word& initial, ConnectorSchedule inserts,
                              ClosureTransform transform);
/// P_0 = a, P_{n+1} = P_n a reverse_complement(P_n).
PrefixStream paperfolding();

/// The finite block U_n of a reversal-closure construction.
Word reversal_closure_block(const Word& initial, const ConnectorSchedule& inserts,
                            ClosureTransform transform, std::size_t n);
Word paperfolding_block(std::size_t n);
Word fibonacci_block(std::size_t n);

PrefixStream make_stream(const GeneratorSpec& spec);

// Textual specs and the preset registry --------------------------------------

class UnknownGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// phi, psi, tau, fibonacci, thue-morse
std::optional<Morphism> named_morphism(std::string_view name);

struct Preset {
  std::string name;
  std::string spec;
  std::string description;
};

const std::vector<Preset>& presets();
std::string preset_listing();

/// One-line form, e.g. `image(psi, fib)`, `pow(aababb)`, `fix(tau, a)`,
/// `revclose(U0=ab, inserts=[cd], t=rev)`, `shift(fib, 1)`. Bare names
/// resolve through the preset registry, and `pow:<word>` is accepted too.
/// Throws UnknownGenerator for an unknown name, std::invalid_argument for
/// malformed text.
GeneratorSpec parse_generator_spec(std::string_view text);

std::string to_string(const GeneratorSpec& spec);

/// parse_generator_spec followed by make_stream.
PrefixStream resolve_stream(std::string_view ref);

}  // namespace palwords

#endif  // PALWORDS_GENERATORS_HPP
