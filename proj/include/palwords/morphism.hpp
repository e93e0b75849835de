#ifndef PALWORDS_MORPHISM_HPP
#define PALWORDS_MORPHISM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "palwords/word.hpp"

namespace palwords {

/// Non-erasing morphism from `source()` letters to words over `target()`.
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  /// Parses "a->a, b->bc". Every letter of the source alphabet a..x must
  /// appear exactly once on a left-hand side.
  static Morphism parse(std::string_view text);

  [[nodiscard]] Alphabet source() const noexcept { return source_; }
  [[nodiscard]] Alphabet target() const noexcept { return target_; }
  [[nodiscard]] const Word& image(Letter x) const { return images_.at(x); }

  /// Image of a whole word (letterwise concatenation).
  [[nodiscard]] Word apply(const Word& w) const;

  /// image(seed) begins with seed and has length >= 2.
  [[nodiscard]] bool prolongable_at(Letter seed) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

}  // namespace palwords

#endif  // PALWORDS_MORPHISM_HPP
