#include "palwords/morphism.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace palwords {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw std::invalid_argument("morphism needs one image per source letter");
  }
  for (auto& img : images_) {
    if (img.empty()) throw std::invalid_argument("morphism images must be non-empty");
    img = img.widened(target_);
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::optional<Word>> slots;
  std::size_t target_size = 2;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto rule = trim(text.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (rule.empty()) continue;
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos) {
      throw std::invalid_argument("morphism rule '" + std::string(rule) +
                                  "' is not of the form x->word");
    }
    const auto lhs = trim(rule.substr(0, arrow));
    const auto rhs = trim(rule.substr(arrow + 2));
    if (lhs.size() != 1 || lhs[0] < 'a' || lhs[0] > 'h') {
      throw std::invalid_argument("morphism rule '" + std::string(rule) +
                                  "' must map a single letter a-h");
    }
    const auto x = static_cast<std::size_t>(lhs[0] - 'a');
    if (slots.size() <= x) slots.resize(x + 1);
    if (slots[x]) {
      throw std::invalid_argument(std::string("letter '") + lhs[0] +
                                  "' mapped twice");
    }
    Word img = Word::parse(rhs);
    target_size = std::max(target_size, img.alphabet().size());
    slots[x] = std::move(img);
  }
  if (slots.empty()) throw std::invalid_argument("empty morphism");
  std::vector<Word> images;
  for (std::size_t x = 0; x < slots.size(); ++x) {
    if (!slots[x]) {
      throw std::invalid_argument(std::string("morphism has no image for '") +
                                  Alphabet::symbol(static_cast<Letter>(x)) + "'");
    }
    images.push_back(*slots[x]);
  }
  const std::size_t source_size = images.size();
  return Morphism(Alphabet(source_size), Alphabet(target_size), std::move(images));
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet().size() > source_.size()) {
    for (Letter x : w) {
      if (!source_.contains(x)) {
        throw std::invalid_argument("word '" + w.str() +
                                    "' uses letters outside the morphism's domain");
      }
    }
  }
  Word out(target_);
  for (Letter x : w) out += images_.at(x);
  return out;
}

bool Morphism::prolongable_at(Letter seed) const {
  if (!source_.contains(seed)) return false;
  const Word& img = images_[seed];
  return img.size() >= 2 && img[0] == seed;
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x) out += ", ";
    out += Alphabet::symbol(static_cast<Letter>(x));
    out += "->";
    out += images_[x].str();
  }
  return out;
}

}  // namespace palwords
