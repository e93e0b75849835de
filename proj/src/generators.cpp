#include "palwords/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace palwords {

Word apply_transform(const Word& w, ClosureTransform t) {
  switch (t) {
    case ClosureTransform::identity:
      return w;
    case ClosureTransform::reverse:
      return reverse(w);
    case ClosureTransform::reverse_complement: {
      const auto top = static_cast<Letter>(w.alphabet().size() - 1);
      std::vector<Letter> letters(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        letters[w.size() - 1 - i] = static_cast<Letter>(top - w[i]);
      }
      return Word(w.alphabet(), std::move(letters));
    }
  }
  return w;
}

std::string_view to_string(ClosureTransform t) {
  switch (t) {
    case ClosureTransform::identity:
      return "id";
    case ClosureTransform::reverse:
      return "rev";
    case ClosureTransform::reverse_complement:
      return "hat";
  }
  return "?";
}

const Word& ConnectorSchedule::at(std::size_t step) const {
  if (step < head.size()) return head[step];
  if (cycle.empty()) throw std::invalid_argument("connector schedule has an empty cycle");
  return cycle[(step - head.size()) % cycle.size()];
}

namespace {

Alphabet widest(std::initializer_list<Alphabet> alphabets) {
  Alphabet out(1);
  for (auto a : alphabets) {
    if (a.size() > out.size()) out = a;
  }
  return out;
}

std::string word_list(const std::vector<Word>& words) {
  std::string out = "[";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ",";
    out += words[i].str();
  }
  return out + "]";
}

std::string revclose_text(const Word& initial, const ConnectorSchedule& inserts,
                          ClosureTransform t) {
  std::string out = "revclose(U0=" + initial.str();
  if (!inserts.head.empty()) out += ", head=" + word_list(inserts.head);
  out += ", inserts=" + word_list(inserts.cycle);
  out += ", t=" + std::string(to_string(t)) + ")";
  return out;
}

class PeriodicSource final : public StreamSource {
 public:
  explicit PeriodicSource(Word block)
      : StreamSource(block.alphabet()), block_(std::move(block)) {}
  std::string describe() const override { return "pow(" + block_.str() + ")"; }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    while (buffer.size() < n) buffer.push_back(block_[buffer.size() % block_.size()]);
  }

 private:
  Word block_;
};

class FibonacciSource final : public StreamSource {
 public:
  FibonacciSource() : StreamSource(Alphabet(2)) {}
  std::string describe() const override { return "fib"; }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    while (current_.size() < n) {
      auto next = current_;
      next.insert(next.end(), previous_.begin(), previous_.end());
      previous_ = std::move(current_);
      current_ = std::move(next);
    }
    buffer.insert(buffer.end(), current_.begin() + static_cast<std::ptrdiff_t>(buffer.size()),
                  current_.end());
  }

 private:
  std::vector<Letter> previous_{1};  // f_0 = b
  std::vector<Letter> current_{0};   // f_1 = a
};

class FixedPointSource final : public StreamSource {
 public:
  FixedPointSource(Morphism m, Letter seed)
      : StreamSource(m.source()), morphism_(std::move(m)), seed_(seed) {}
  std::string describe() const override {
    return "fix([" + morphism_.str() + "], " + Alphabet::symbol(seed_) + ")";
  }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    if (buffer.empty()) {
      const Word& first = morphism_.image(seed_);
      buffer.assign(first.begin(), first.end());
      expanded_ = 1;
    }
    // Invariant: buffer == m(buffer[0 .. expanded_)), and buffer.size() > expanded_.
    while (buffer.size() < n) {
      const Word& img = morphism_.image(buffer[expanded_++]);
      buffer.insert(buffer.end(), img.begin(), img.end());
    }
  }

 private:
  Morphism morphism_;
  Letter seed_;
  std::size_t expanded_ = 0;
};

class ImageSource final : public StreamSource {
 public:
  ImageSource(Morphism m, PrefixStream inner)
      : StreamSource(m.target()), morphism_(std::move(m)), inner_(std::move(inner)) {}
  std::string describe() const override {
    return "image([" + morphism_.str() + "], " + inner_.describe() + ")";
  }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    while (buffer.size() < n) {
      if (consumed_ == fetched_.size()) {
        fetched_ = inner_.prefix(std::max<std::size_t>(64, 2 * fetched_.size()));
      }
      const Word& img = morphism_.image(fetched_[consumed_++]);
      buffer.insert(buffer.end(), img.begin(), img.end());
    }
  }

 private:
  Morphism morphism_;
  PrefixStream inner_;
  Word fetched_;
  std::size_t consumed_ = 0;
};

class ReversalClosureSource final : public StreamSource {
 public:
  ReversalClosureSource(Alphabet alphabet, Word initial, ConnectorSchedule inserts,
                        ClosureTransform transform)
      : StreamSource(alphabet),
        current_(initial.widened(alphabet)),
        inserts_(std::move(inserts)),
        transform_(transform),
        text_(revclose_text(initial, inserts_, transform)) {}

  std::string describe() const override { return text_; }

 protected:
  void grow(std::vector<Letter>& buffer, std::size_t n) override {
    while (current_.size() < n) {
      Word next = current_;
      next += inserts_.at(step_++);
      next += apply_transform(current_, transform_);
      current_ = std::move(next);
    }
    buffer.insert(buffer.end(), current_.begin() + static_cast<std::ptrdiff_t>(buffer.size()),
                  current_.end());
  }

 private:
  Word current_;
  ConnectorSchedule inserts_;
  ClosureTransform transform_;
  std::string text_;
  std::size_t step_ = 0;
};

Alphabet closure_alphabet(const Word& initial, const ConnectorSchedule& inserts) {
  Alphabet out = initial.alphabet();
  for (const auto* list : {&inserts.head, &inserts.cycle}) {
    for (const auto& w : *list) out = widest({out, w.alphabet()});
  }
  return out;
}

ConnectorSchedule widen_schedule(ConnectorSchedule s, Alphabet alphabet) {
  for (auto* list : {&s.head, &s.cycle}) {
    for (auto& w : *list) w = w.widened(alphabet);
  }
  return s;
}

}  // namespace

PrefixStream periodic(const Word& u) {
  if (u.empty()) throw std::invalid_argument("periodic block must be non-empty");
  return PrefixStream(std::make_shared<PeriodicSource>(u));
}

PrefixStream fibonacci() { return PrefixStream(std::make_shared<FibonacciSource>()); }

PrefixStream fixed_point(const Morphism& m, Letter seed) {
  if (!m.prolongable_at(seed)) throw std::invalid_argument("not prolongable");
  for (Letter x = 0; x < m.source().size(); ++x) {
    for (Letter y : m.image(x)) {
      if (!m.source().contains(y)) {
        throw std::invalid_argument("fixed point needs images over the source alphabet");
      }
    }
  }
  return PrefixStream(std::make_shared<FixedPointSource>(m, seed));
}

PrefixStream image(const Morphism& m, const PrefixStream& inner) {
  if (inner.alphabet().size() > m.source().size()) {
    throw std::invalid_argument("alphabet mismatch: stream over " +
                                std::to_string(inner.alphabet().size()) +
                                " letters, morphism defined on " +
                                std::to_string(m.source().size()));
  }
  return PrefixStream(std::make_shared<ImageSource>(m, inner));
}

PrefixStream reversal_closure(const Word& initial, ConnectorSchedule inserts,
                              ClosureTransform transform) {
  if (initial.empty()) throw std::invalid_argument("reversal closure needs a non-empty U0");
  if (inserts.cycle.empty()) inserts.cycle.push_back(Word(initial.alphabet()));
  const Alphabet alphabet = closure_alphabet(initial, inserts);
  return PrefixStream(std::make_shared<ReversalClosureSource>(
      alphabet, initial, widen_schedule(std::move(inserts), alphabet), transform));
}

PrefixStream paperfolding() {
  return reversal_closure(Word::parse("a"), {{}, {Word::parse("a")}},
                          ClosureTransform::reverse_complement);
}

Word reversal_closure_block(const Word& initial, const ConnectorSchedule& inserts,
                            ClosureTransform transform, std::size_t n) {
  const Alphabet alphabet = closure_alphabet(initial, inserts);
  Word u = initial.widened(alphabet);
  for (std::size_t step = 0; step < n; ++step) {
    Word next = u;
    next += inserts.at(step).widened(alphabet);
    next += apply_transform(u, transform);
    u = std::move(next);
  }
  return u;
}

Word paperfolding_block(std::size_t n) {
  return reversal_closure_block(Word::parse("a"), {{}, {Word::parse("a")}},
                                ClosureTransform::reverse_complement, n);
}

Word fibonacci_block(std::size_t n) {
  Word previous = Word::parse("b");
  Word current = Word::parse("a");
  if (n == 0) return previous;
  for (std::size_t i = 1; i < n; ++i) {
    Word next = current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

PrefixStream make_stream(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& node) -> PrefixStream {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PeriodicSpec>) {
          return periodic(node.block);
        } else if constexpr (std::is_same_v<T, FibonacciSpec>) {
          return fibonacci();
        } else if constexpr (std::is_same_v<T, FixedPointSpec>) {
          return fixed_point(node.morphism, node.seed);
        } else if constexpr (std::is_same_v<T, ImageSpec>) {
          return image(node.morphism, make_stream(*node.inner));
        } else if constexpr (std::is_same_v<T, ReversalClosureSpec>) {
          return reversal_closure(node.initial, node.inserts, node.transform);
        } else {
          return shift(make_stream(*node.inner), node.offset);
        }
      },
      spec.node);
}

// Registry -------------------------------------------------------------------

std::optional<Morphism> named_morphism(std::string_view name) {
  if (name == "phi") return Morphism::parse("a->a, b->bc");
  if (name == "psi") return Morphism::parse("a->a, b->abbab");
  if (name == "tau" || name == "thue-morse") return Morphism::parse("a->ab, b->ba");
  if (name == "fibonacci") return Morphism::parse("a->ab, b->a");
  return std::nullopt;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> registry = {
      {"fibonacci", "fib", "Fibonacci word, f_{n+1} = f_n f_{n-1}"},
      {"phi-F", "image(phi, fib)", "image of the Fibonacci word under a->a, b->bc"},
      {"psi-F", "image(psi, fib)", "image of the Fibonacci word under a->a, b->abbab"},
      {"paperfolding", "revclose(U0=a, inserts=[a], t=hat)",
       "paperfolding word, P_{n+1} = P_n a hat(P_n)"},
      {"tau-P", "image(tau, paperfolding)", "paperfolding word under a->ab, b->ba"},
      {"berstel4", "revclose(U0=ab, inserts=[cd], t=rev)",
       "four-letter word U_{n+1} = U_n cd rev(U_n)"},
      {"prop56", "revclose(U0=aabb, inserts=[ab,ba], t=rev)",
       "binary word whose longest palindrome has length 5"},
      {"lemma-finite", "revclose(U0=abaabbabaaabbaaba, inserts=[bbaa,aabb], t=rev)",
       "binary word closed under reversal with 13 palindromes"},
      {"thue-morse", "fix(tau, a)", "fixed point of a->ab, b->ba"},
  };
  return registry;
}

std::string preset_listing() {
  std::ostringstream os;
  os << "known presets:\n";
  for (const auto& p : presets()) {
    os << "  " << p.name << "  = " << p.spec << "  (" << p.description << ")\n";
  }
  os << "  pow:<word>  = periodic word <word>^infinity\n";
  return os.str();
}

// Parser ---------------------------------------------------------------------

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec parse_all() {
    GeneratorSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad generator spec '" + std::string(text_) + "' at " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Word word() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'h') ++pos_;
    return Word::parse(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_ws();
    std::size_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<Word> word_list() {
    expect('[');
    std::vector<Word> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(word());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  Morphism morphism() {
    if (peek('[')) {
      ++pos_;
      const auto close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated morphism");
      auto m = Morphism::parse(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return m;
    }
    const auto name = identifier();
    auto m = named_morphism(name);
    if (!m) throw UnknownGenerator("unknown morphism '" + name + "' (known: phi, psi, tau, fibonacci, thue-morse)");
    return *m;
  }

  ClosureTransform transform() {
    const auto name = identifier();
    if (name == "id" || name == "identity") return ClosureTransform::identity;
    if (name == "rev" || name == "reverse") return ClosureTransform::reverse;
    if (name == "hat" || name == "revcomp") return ClosureTransform::reverse_complement;
    fail("unknown transform '" + name + "' (use id, rev or hat)");
  }

  GeneratorSpec parse_spec() {
    const auto name = identifier();
    if (name == "pow" && peek(':')) {
      ++pos_;
      return {PeriodicSpec{word()}};
    }
    if (!peek('(')) return named(name);
    ++pos_;
    GeneratorSpec out;
    if (name == "pow") {
      Word block = word();
      if (block.empty()) fail("pow needs a non-empty word");
      out = {PeriodicSpec{std::move(block)}};
    } else if (name == "fix") {
      Morphism m = morphism();
      expect(',');
      const Word seed = word();
      if (seed.size() != 1) fail("fix needs a single seed letter");
      out = {FixedPointSpec{std::move(m), seed[0]}};
    } else if (name == "image") {
      Morphism m = morphism();
      expect(',');
      out = {ImageSpec{std::move(m), std::make_shared<GeneratorSpec>(parse_spec())}};
    } else if (name == "shift") {
      auto inner = std::make_shared<GeneratorSpec>(parse_spec());
      expect(',');
      out = {ShiftedSpec{std::move(inner), number()}};
    } else if (name == "revclose") {
      ReversalClosureSpec rc{Word(), {}, ClosureTransform::reverse};
      bool have_initial = false;
      while (true) {
        const auto key = identifier();
        expect('=');
        if (key == "U0" || key == "u0") {
          rc.initial = word();
          have_initial = true;
        } else if (key == "inserts") {
          rc.inserts.cycle = word_list();
        } else if (key == "head") {
          rc.inserts.head = word_list();
        } else if (key == "t") {
          rc.transform = transform();
        } else {
          fail("unknown revclose key '" + key + "'");
        }
        if (!peek(',')) break;
        ++pos_;
      }
      if (!have_initial || rc.initial.empty()) fail("revclose needs a non-empty U0");
      if (rc.inserts.cycle.empty()) fail("revclose needs a non-empty inserts cycle");
      out = {std::move(rc)};
    } else {
      throw UnknownGenerator("unknown generator '" + name + "'\n" + preset_listing());
    }
    expect(')');
    return out;
  }

  GeneratorSpec named(const std::string& name) {
    if (name == "fib") return {FibonacciSpec{}};
    for (const auto& p : presets()) {
      if (p.name == name) return SpecParser(p.spec).parse_all();
    }
    throw UnknownGenerator("unknown preset '" + name + "'\n" + preset_listing());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  return SpecParser(text).parse_all();
}

std::string to_string(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PeriodicSpec>) {
          return "pow(" + node.block.str() + ")";
        } else if constexpr (std::is_same_v<T, FibonacciSpec>) {
          return "fib";
        } else if constexpr (std::is_same_v<T, FixedPointSpec>) {
          return "fix([" + node.morphism.str() + "], " + Alphabet::symbol(node.seed) + ")";
        } else if constexpr (std::is_same_v<T, ImageSpec>) {
          return "image([" + node.morphism.str() + "], " + to_string(*node.inner) + ")";
        } else if constexpr (std::is_same_v<T, ReversalClosureSpec>) {
          return revclose_text(node.initial, node.inserts, node.transform);
        } else {
          return "shift(" + to_string(*node.inner) + ", " + std::to_string(node.offset) + ")";
        }
      },
      spec.node);
}

PrefixStream resolve_stream(std::string_view ref) {
  return make_stream(parse_generator_spec(ref));
}

}  // namespace palwords
