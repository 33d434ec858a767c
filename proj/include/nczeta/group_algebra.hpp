#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nczeta/free_group.hpp"

namespace nczeta {

using Integer = mpz_class;

// Element of the integer group algebra Z F: a finite map from reduced words
// to nonzero integers. The zero element is the empty map.
class AlgebraElement {
 public:
  using TermMap = std::unordered_map<ReducedWord, Integer, WordHash>;

  AlgebraElement() = default;
  // c * w
  AlgebraElement(const ReducedWord& w, const Integer& c);
  explicit AlgebraElement(const ReducedWord& w) : AlgebraElement(w, Integer(1)) {}

  static AlgebraElement one() { return AlgebraElement(ReducedWord{}); }

  // Coefficient (a, g); 0 when g is outside the support.
  Integer coeff(const ReducedWord& g) const;
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Longest reduced word in the support (0 for the zero element).
  std::size_t max_length() const noexcept;

  // Adds c * w in place, dropping the term if it cancels.
  void add_term(const ReducedWord& w, const Integer& c);
  // Adds c1 * c2 * w in place without a temporary product.
  void add_product_term(ReducedWord&& w, const Integer& c1, const Integer& c2);
  void reserve(std::size_t n) { terms_.reserve(n); }
  // Removes every term whose word is longer than `max_len`.
  void truncate_length(std::size_t max_len);

  // Terms sorted by (word length, lexicographic letters).
  std::vector<std::pair<ReducedWord, Integer>> sorted_terms() const;

  AlgebraElement& operator+=(const AlgebraElement& b);
  AlgebraElement& operator-=(const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scalar_multiply(const Integer& lambda, const AlgebraElement& a);
inline Integer coeff(const AlgebraElement& a, const ReducedWord& g) { return a.coeff(g); }

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  r -= b;
  return r;
}
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

// Display syntax `3*a b^-1 + -1*1 + d`; a coefficient of 1 is omitted and
// the zero element prints as `0`.
std::string to_string(const AlgebraElement& a, const GeneratorTable& table);

// Parses the display syntax. Terms may be joined by `+` or `-`, the `*`
// between coefficient and word is optional, and a bare integer is a multiple
// of the identity.
AlgebraElement parse_element(std::string_view text, GeneratorTable& table);

}  // namespace nczeta
