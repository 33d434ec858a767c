#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nczeta/algebra_matrix.hpp"
#include "nczeta/series.hpp"

namespace nczeta {

// Letter [g, i, j] of the triple alphabet of M: the word g occurs in M_{i,j}.
struct TripleLetter {
  ReducedWord g;
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const TripleLetter&, const TripleLetter&) = default;
};

using TripleWord = std::vector<TripleLetter>;

// One letter per (i, j, support word of M_{i,j}), ordered by
// (i, j, word length, lexicographic letters).
std::vector<TripleLetter> alphabet_of(const AlgebraMatrix& m);

// Coefficient of w in the series S_M: the product of the entry coefficients
// when the index path closes up (j_n = i_1, j_k = i_{k+1}) and g_1...g_n = 1,
// otherwise 0. The empty word has coefficient dim(M).
Integer s_coeff(const AlgebraMatrix& m, std::span<const TripleLetter> w);

// Lyndon words of length 1..max_length over the letters 0..alphabet_size-1,
// sorted by (length, lexicographic order).
struct LyndonList {
  std::vector<std::vector<std::size_t>> words;
  std::size_t max_length = 0;
};

LyndonList lyndon_words(std::size_t alphabet_size, std::size_t max_length);

// True when w is strictly smaller than each of its nontrivial rotations.
bool is_lyndon(std::span<const std::size_t> w);

struct EnumerationOptions {
  std::uint64_t max_nodes = 500'000'000;
};

// prod over Lyndon words l with |l| <= L of 1 / (1 - (S_M, l) t^|l|), at
// order L. Factors are multiplied in (length, lexicographic) order; Lyndon
// words whose coefficient is forced to vanish by an open index path or an
// uncancellable prefix are skipped, since their factor is 1.
Series euler_product(const AlgebraMatrix& m, std::size_t max_length, const EnumerationOptions& options = {});

// sum of (S_M, w) over all words w of length n in the triple alphabet.
Integer sum_coeffs_by_length(const AlgebraMatrix& m, std::size_t n, const EnumerationOptions& options = {});

}  // namespace nczeta
