#include <algorithm>
#include <atomic>
#include <thread>

#include "palwords/harness.hpp"

namespace palwords {

namespace {

std::uint64_t checked_power(std::size_t base, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    if (total > kEnumerationGuard) {
      throw EnumerationGuardExceeded(
          "enumerating " + std::to_string(base) + "^" + std::to_string(n) +
          " words exceeds the guard of " + std::to_string(kEnumerationGuard) +
          " (needs a bound of at least " + std::to_string(base) + "^" + std::to_string(n) + ")");
    }
  }
  return total;
}

}  // namespace

WordEnumeration::WordEnumeration(Alphabet alphabet, std::size_t n, Dedupe dedupe)
    : alphabet_(alphabet), n_(n), dedupe_(dedupe), raw_size_(checked_power(alphabet.size(), n)) {}

WordEnumeration::iterator WordEnumeration::begin() const {
  return iterator(Word(alphabet_, std::vector<Letter>(n_, 0)), dedupe_);
}

WordEnumeration enumerate_words(Alphabet alphabet, std::size_t n, Dedupe dedupe) {
  return WordEnumeration(alphabet, n, dedupe);
}

WordEnumeration::iterator::iterator(Word start, Dedupe dedupe)
    : current_(std::move(start)), dedupe_(dedupe), done_(false) {
  skip_non_canonical();
}

// Odometer increment; returns false after the last word.
bool WordEnumeration::iterator::advance() {
  const auto k = static_cast<Letter>(current_.alphabet().size());
  std::vector<Letter> letters(current_.begin(), current_.end());
  std::size_t i = letters.size();
  while (i > 0) {
    --i;
    if (letters[i] + 1 < k) {
      ++letters[i];
      current_ = Word(current_.alphabet(), std::move(letters));
      return true;
    }
    letters[i] = 0;
  }
  return false;
}

void WordEnumeration::iterator::skip_non_canonical() {
  if (dedupe_ != Dedupe::iso_class) return;
  while (!done_ && IsoClass(current_).canonical() != current_) {
    if (!advance()) done_ = true;
  }
}

WordEnumeration::iterator& WordEnumeration::iterator::operator++() {
  if (!advance()) {
    done_ = true;
    return *this;
  }
  skip_non_canonical();
  return *this;
}

namespace {

struct ScanFrame {
  Word word;
  PalTree tree;
};

void scan_subtree(std::size_t worker, ScanFrame frame, std::size_t n,
                  const ScanOptions& options, const ScanVisitor& visit,
                  std::uint64_t& visited) {
  if (frame.word.size() == n) {
    visit(worker, frame.word, frame.tree);
    ++visited;
    return;
  }
  const auto k = frame.word.alphabet().size();
  for (Letter x = 0; x < k; ++x) {
    ScanFrame child = frame;
    child.word.push_back(x);
    child.tree.push_back(x);
    if (options.pal_budget && child.tree.distinct_palindromes() + 1 > *options.pal_budget) continue;
    scan_subtree(worker, std::move(child), n, options, visit, visited);
  }
}

}  // namespace

std::uint64_t scan_words(Alphabet alphabet, std::size_t n, const ScanOptions& options,
                         const ScanVisitor& visit) {
  if (!options.pal_budget) checked_power(alphabet.size(), n);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  // Split the tree at the shallowest depth that yields enough subtrees for
  // every worker; deeper levels are scanned sequentially by one worker.
  std::size_t depth = 0;
  std::size_t roots = 1;
  while (jobs > 1 && depth < n && roots < 4 * jobs) {
    roots *= alphabet.size();
    ++depth;
  }
  std::vector<ScanFrame> frontier{{Word(alphabet), PalTree(alphabet)}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<ScanFrame> next;
    for (const auto& f : frontier) {
      for (Letter x = 0; x < alphabet.size(); ++x) {
        ScanFrame child = f;
        child.word.push_back(x);
        child.tree.push_back(x);
        if (options.pal_budget && child.tree.distinct_palindromes() + 1 > *options.pal_budget) continue;
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  if (jobs == 1) {
    std::uint64_t visited = 0;
    for (auto& f : frontier) scan_subtree(0, std::move(f), n, options, visit, visited);
    return visited;
  }

  std::atomic<std::size_t> next_root{0};
  std::vector<std::uint64_t> visited(jobs, 0);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      while (true) {
        const auto i = next_root.fetch_add(1);
        if (i >= frontier.size()) return;
        scan_subtree(w, frontier[i], n, options, visit, visited[w]);
      }
    });
  }
  for (auto& t : workers) t.join();
  std::uint64_t total = 0;
  for (auto v : visited) total += v;
  return total;
}

}  // namespace palwords
