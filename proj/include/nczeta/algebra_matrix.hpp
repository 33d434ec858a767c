#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nczeta/group_algebra.hpp"

namespace nczeta {

// Square matrix over Z F. Indices are 0-based in the API and 1-based in text.
class AlgebraMatrix {
 public:
  explicit AlgebraMatrix(std::size_t dim);

  static AlgebraMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  AlgebraElement& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  // Longest reduced word occurring in any entry.
  std::size_t max_word_length() const noexcept;
  std::size_t term_count() const noexcept;

  friend bool operator==(const AlgebraMatrix&, const AlgebraMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<AlgebraElement> entries_;
};

// A matrix together with the names of the generators its words use.
struct NamedMatrix {
  GeneratorTable generators;
  AlgebraMatrix matrix;
};

AlgebraMatrix mat_multiply(const AlgebraMatrix& a, const AlgebraMatrix& b);
AlgebraMatrix scalar_matrix(const Integer& lambda, const AlgebraMatrix& m);

// (Tr A, 1): the sum of the identity coefficients on the diagonal.
Integer trace_coeff_one(const AlgebraMatrix& a);

struct SequenceOptions {
  bool prune = true;
  // Ceiling on the number of stored terms across one matrix power.
  std::size_t max_terms = 50'000'000;
};

// [a_1(M), ..., a_N(M)] with a_n(M) = (Tr M^n, 1), computed by repeated
// right multiplication by M. With pruning, after forming M^k every term
// longer than (N - k) * l_max is dropped: one multiplication by M shortens a
// word by at most l_max, so such terms never reach the identity by step N.
std::vector<Integer> a_sequence(const AlgebraMatrix& m, int n_max, const SequenceOptions& options = {});

struct OracleOptions {
  int max_length = 8;
  std::uint64_t max_paths = 200'000'000;
};

// a_n(M) by direct summation over every closed index path i_1 -> ... -> i_n
// -> i_1 and every choice of support words, keeping products equal to 1.
Integer a_n_oracle(const AlgebraMatrix& m, int n, const OracleOptions& options = {});

}  // namespace nczeta
