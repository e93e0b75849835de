#include "palwords/stream.hpp"

#include <stdexcept>

namespace palwords {

Word StreamSource::prefix(std::size_t n) {
  std::lock_guard lock(mutex_);
  if (buffer_.size() < n) grow(buffer_, n);
  if (buffer_.size() < n) {
    throw std::logic_error("stream '" + describe() + "' failed to grow to " +
                           std::to_string(n));
  }
  return Word(alphabet_, std::vector<Letter>(buffer_.begin(),
                                             buffer_.begin() + static_cast<std::ptrdiff_t>(n)));
}

PrefixStream::PrefixStream(std::shared_ptr<StreamSource> source)
    : source_(std::move(source)) {
  if (!source_) throw std::invalid_argument("null stream source");
}

namespace {

class ShiftedSource final : public StreamSource {
 public:
  ShiftedSource(PrefixStream inner, std::size_t k)
      : StreamSource(inner.alphabet()), inner_(std::move(inner)), k_(k) {}

  std::string describe() const override {
    return "shift(" + inner_.describe() + ", " + std::to_string(k_) + ")";
  }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    const Word w = inner_.prefix(n + k_);
    buffer.insert(buffer.end(), w.begin() + static_cast<std::ptrdiff_t>(k_ + buffer.size()),
                  w.end());
  }

 private:
  PrefixStream inner_;
  std::size_t k_;
};

}  // namespace

PrefixStream shift(const PrefixStream& s, std::size_t k) {
  if (k == 0) return s;
  return PrefixStream(std::make_shared<ShiftedSource>(s, k));
}

}  // namespace palwords
