#ifndef PALWORDS_STREAM_HPP
#define PALWORDS_STREAM_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "palwords/word.hpp"

namespace palwords {

/// Producer of ever-longer prefixes of one infinite word. Subclasses append
/// letters to `buffer` until it holds at least `n` of them; the base class
/// owns the buffer and serializes concurrent requests.
class StreamSource {
 public:
  explicit StreamSource(Alphabet alphabet) : alphabet_(alphabet) {}
  virtual ~StreamSource() = default;
  StreamSource(const StreamSource&) = delete;
  StreamSource& operator=(const StreamSource&) = delete;

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] virtual std::string describe() const = 0;

  /// First n letters. Thread-safe.
  Word prefix(std::size_t n);

 protected:
  /// Grow `buffer` to at least n letters. Called with the lock held; must
  /// only ever append.
  virtual void grow(std::vector<Letter>& buffer, std::size_t n) = 0;

 private:
  Alphabet alphabet_;
  std::mutex mutex_;
  std::vector<Letter> buffer_;
};

/// Shared handle to a lazily materialized infinite word. Copies share the
/// materialized prefix, and prefix(m) is a prefix of prefix(n) for m <= n.
class PrefixStream {
 public:
  explicit PrefixStream(std::shared_ptr<StreamSource> source);

  [[nodiscard]] Word prefix(std::size_t n) const { return source_->prefix(n); }
  [[nodiscard]] Alphabet alphabet() const noexcept { return source_->alphabet(); }
  [[nodiscard]] std::string describe() const { return source_->describe(); }

 private:
  std::shared_ptr<StreamSource> source_;
};

/// Stream whose i-th letter is the (i + k)-th letter of s (the shift T^k).
PrefixStream shift(const PrefixStream& s, std::size_t k);

}  // namespace palwords

#endif  // PALWORDS_STREAM_HPP
