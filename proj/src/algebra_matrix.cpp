#include "nczeta/algebra_matrix.hpp"

#include <algorithm>

#include "nczeta/errors.hpp"

namespace nczeta {

AlgebraMatrix::AlgebraMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw ValidationError("matrix dimension must be at least 1");
}

AlgebraMatrix AlgebraMatrix::identity(std::size_t dim) {
  AlgebraMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = AlgebraElement::one();
  return m;
}

std::size_t AlgebraMatrix::max_word_length() const noexcept {
  std::size_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.max_length());
  return m;
}

std::size_t AlgebraMatrix::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.support_size();
  return n;
}

AlgebraMatrix mat_multiply(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (a.dim() != b.dim())
    throw ValidationError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  const std::size_t d = a.dim();
  AlgebraMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        for (const auto& [u, cu] : a(i, l).terms())
          for (const auto& [v, cv] : b(l, j).terms()) out(i, j).add_product_term(concat(u, v), cu, cv);
  return out;
}

AlgebraMatrix scalar_matrix(const Integer& lambda, const AlgebraMatrix& m) {
  AlgebraMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = scalar_multiply(lambda, m(i, j));
  return out;
}

Integer trace_coeff_one(const AlgebraMatrix& a) {
  Integer s(0);
  const ReducedWord identity;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i).coeff(identity);
  return s;
}

namespace {

// One step P <- P * M, discarding words longer than `bound`.
AlgebraMatrix step(const AlgebraMatrix& power, const AlgebraMatrix& m, std::size_t bound,
                   const SequenceOptions& options, int k) {
  const std::size_t d = m.dim();
  AlgebraMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j).reserve(power(i, j).support_size());
  std::size_t stored = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      for (const auto& [w, c] : power(i, l).terms()) {
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& [g, e] : m(l, j).terms()) {
            const std::size_t cut = cancellation_length(w, g);
            if (w.length() + g.length() - 2 * cut > bound) continue;
            out(i, j).add_product_term(concat(w, g), c, e);
          }
        }
      }
      stored = 0;
      for (std::size_t r = 0; r <= i; ++r)
        for (std::size_t j = 0; j < d; ++j) stored += out(r, j).support_size();
      if (stored > options.max_terms)
        throw ResourceError("term-count ceiling of " + std::to_string(options.max_terms) +
                            " exceeded while forming M^" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace

std::vector<Integer> a_sequence(const AlgebraMatrix& m, int n_max, const SequenceOptions& options) {
  if (n_max < 1) throw ValidationError("sequence length N must be at least 1");
  const std::size_t n = static_cast<std::size_t>(n_max);
  const std::size_t lmax = m.max_word_length();
  const auto bound_after = [&](std::size_t k) {
    return options.prune ? (n - k) * lmax : static_cast<std::size_t>(-1);
  };

  std::vector<Integer> out;
  out.reserve(n);
  AlgebraMatrix power = m;
  if (options.prune)
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) power(i, j).truncate_length(bound_after(1));
  if (power.term_count() > options.max_terms)
    throw ResourceError("term-count ceiling of " + std::to_string(options.max_terms) + " exceeded while forming M^1");
  out.push_back(trace_coeff_one(power));
  for (std::size_t k = 2; k <= n; ++k) {
    power = step(power, m, bound_after(k), options, static_cast<int>(k));
    out.push_back(trace_coeff_one(power));
  }
  return out;
}

namespace {

struct EntryTerm {
  std::size_t col;
  std::span<const Letter> letters;
  const Integer* coeff;
};

struct OracleWalk {
  std::vector<std::vector<EntryTerm>> rows;
  std::size_t start = 0;
  std::size_t length = 0;
  std::uint64_t visited = 0;
  std::uint64_t max_paths = 0;
  std::vector<Letter> raw;
  Integer total;

  void extend(std::size_t depth, std::size_t row, const Integer& product) {
    if (++visited > max_paths)
      throw ResourceError("oracle enumeration exceeded " + std::to_string(max_paths) + " paths");
    if (depth == length) {
      if (row == start && ReducedWord::reduce(raw).is_identity()) total += product;
      return;
    }
    for (const auto& t : rows[row]) {
      const std::size_t mark = raw.size();
      raw.insert(raw.end(), t.letters.begin(), t.letters.end());
      extend(depth + 1, t.col, product * *t.coeff);
      raw.resize(mark);
    }
  }
};

}  // namespace

Integer a_n_oracle(const AlgebraMatrix& m, int n, const OracleOptions& options) {
  if (n < 1) throw ValidationError("oracle length must be at least 1");
  if (n > options.max_length)
    throw ResourceError("oracle length " + std::to_string(n) + " exceeds the guard of " +
                        std::to_string(options.max_length));
  OracleWalk walk;
  walk.rows.resize(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& [w, c] : m(i, j).terms()) walk.rows[i].push_back({j, w.letters(), &c});
  walk.length = static_cast<std::size_t>(n);
  walk.max_paths = options.max_paths;
  walk.total = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    walk.start = i;
    walk.extend(0, i, Integer(1));
  }
  return walk.total;
}

}  // namespace nczeta
