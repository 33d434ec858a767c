#include "nczeta/cyclic_zeta.hpp"

#include <algorithm>
#include <string>

#include "nczeta/errors.hpp"

namespace nczeta {

std::vector<TripleLetter> alphabet_of(const AlgebraMatrix& m) {
  std::vector<TripleLetter> out;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (auto& [g, c] : m(i, j).sorted_terms()) out.push_back({std::move(g), i, j});
  return out;
}

Integer s_coeff(const AlgebraMatrix& m, std::span<const TripleLetter> w) {
  std::vector<Integer> coeffs;
  coeffs.reserve(w.size());
  for (const auto& letter : w) {
    if (letter.row >= m.dim() || letter.col >= m.dim())
      throw ValidationError("triple letter index out of range");
    Integer c = m(letter.row, letter.col).coeff(letter.g);
    if (c == 0)
      throw ValidationError("word does not occur in entry (" + std::to_string(letter.row + 1) + "," +
                            std::to_string(letter.col + 1) + ")");
    coeffs.push_back(std::move(c));
  }
  if (w.empty()) return Integer(static_cast<unsigned long>(m.dim()));

  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k].col != w[(k + 1) % w.size()].row) return 0;

  // remaining[k]: total length of letters k.. ; the running product must stay
  // short enough to be cancelled by them.
  std::vector<std::size_t> remaining(w.size() + 1, 0);
  for (std::size_t k = w.size(); k-- > 0;) remaining[k] = remaining[k + 1] + w[k].g.length();
  ReducedWord running;
  for (std::size_t k = 0; k < w.size(); ++k) {
    running = concat(running, w[k].g);
    if (running.length() > remaining[k + 1]) return 0;
  }
  Integer product(1);
  for (const auto& c : coeffs) product *= c;
  return product;
}

bool is_lyndon(std::span<const std::size_t> w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // Compare w with its rotation starting at r.
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t a = w[k];
      const std::size_t b = w[(r + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (k + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

LyndonList lyndon_words(std::size_t alphabet_size, std::size_t max_length) {
  if (alphabet_size == 0) throw ValidationError("Lyndon words need a nonempty alphabet");
  if (max_length == 0) throw ValidationError("Lyndon word length bound must be at least 1");
  LyndonList out;
  out.max_length = max_length;
  // Duval's generation: successive Lyndon words in lexicographic order.
  std::vector<std::size_t> w{0};
  while (!w.empty()) {
    out.words.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.words.begin(), out.words.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

struct AlphabetEntry {
  TripleLetter letter;
  Integer coeff;
};

// Depth-first walk over triple words that keep a consistent index path and a
// running group product that can still cancel to 1.
class ClosedWalk {
 public:
  ClosedWalk(const AlgebraMatrix& m, std::size_t max_depth, const EnumerationOptions& options)
      : max_depth_(max_depth), lmax_(m.max_word_length()), max_nodes_(options.max_nodes) {
    for (auto& letter : alphabet_of(m)) {
      Integer c = m(letter.row, letter.col).coeff(letter.g);
      alphabet_.push_back({std::move(letter), std::move(c)});
    }
  }

  // Calls visit(word, coefficient) for every closed word with trivial
  // product, lengths 1..max_depth. With `lyndon_only`, letters smaller than
  // the first are never appended (no Lyndon word contains one).
  template <typename Visit>
  void run(bool lyndon_only, Visit&& visit) {
    word_.clear();
    nodes_ = 0;
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      word_.assign(1, a);
      descend(lyndon_only, alphabet_[a].letter.g, alphabet_[a].coeff, visit);
    }
  }

  const std::vector<AlphabetEntry>& alphabet() const { return alphabet_; }

 private:
  template <typename Visit>
  void descend(bool lyndon_only, const ReducedWord& running, const Integer& product, Visit& visit) {
    if (++nodes_ > max_nodes_)
      throw ResourceError("word enumeration exceeded " + std::to_string(max_nodes_) + " nodes");
    const std::size_t depth = word_.size();
    if (running.length() > (max_depth_ - depth) * lmax_) return;
    const auto& first = alphabet_[word_.front()].letter;
    const auto& last = alphabet_[word_.back()].letter;
    if (last.col == first.row && running.is_identity()) visit(std::span<const std::size_t>(word_), product);
    if (depth == max_depth_) return;
    const std::size_t lowest = lyndon_only ? word_.front() : 0;
    for (std::size_t a = lowest; a < alphabet_.size(); ++a) {
      const auto& next = alphabet_[a];
      if (next.letter.row != last.col) continue;
      word_.push_back(a);
      descend(lyndon_only, concat(running, next.letter.g), product * next.coeff, visit);
      word_.pop_back();
    }
  }

  std::vector<AlphabetEntry> alphabet_;
  std::vector<std::size_t> word_;
  std::size_t max_depth_;
  std::size_t lmax_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Series euler_product(const AlgebraMatrix& m, std::size_t max_length, const EnumerationOptions& options) {
  if (max_length == 0) throw ValidationError("Euler product length bound must be at least 1");
  struct Factor {
    std::vector<std::size_t> word;
    Integer coeff;
  };
  std::vector<Factor> factors;
  ClosedWalk walk(m, max_length, options);
  walk.run(true, [&](std::span<const std::size_t> w, const Integer& c) {
    if (is_lyndon(w)) factors.push_back({std::vector<std::size_t>(w.begin(), w.end()), c});
  });
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });

  Series result = Series::one(max_length);
  for (const auto& f : factors) {
    // result <- result / (1 - c t^m)
    const std::size_t len = f.word.size();
    for (std::size_t k = len; k <= max_length; ++k) result[k] += result[k - len] * Rational(f.coeff);
  }
  return result;
}

Integer sum_coeffs_by_length(const AlgebraMatrix& m, std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw ValidationError("word length must be at least 1");
  Integer total(0);
  ClosedWalk walk(m, n, options);
  walk.run(false, [&](std::span<const std::size_t> w, const Integer& c) {
    if (w.size() == n) total += c;
  });
  return total;
}

}  // namespace nczeta
