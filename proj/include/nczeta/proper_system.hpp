#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nczeta/group_algebra.hpp"

namespace nczeta {

// Symbol of a right-hand side monomial: an unknown xi_k or an alphabet letter.
struct SystemSymbol {
  enum class Kind { variable, letter };
  Kind kind;
  std::size_t index;

  friend bool operator==(const SystemSymbol&, const SystemSymbol&) = default;
};

struct SystemMonomial {
  Integer coeff;
  std::vector<SystemSymbol> symbols;
};

// Equations xi_i = p_i(xi, letters) with every p_i proper: no empty monomial
// and no monomial consisting of a single unknown.
class ProperSystem {
 public:
  ProperSystem(std::vector<std::string> letters, std::vector<std::vector<SystemMonomial>> rhs);

  std::size_t var_count() const noexcept { return rhs_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::vector<SystemMonomial>& rhs(std::size_t i) const { return rhs_[i]; }

  std::string monomial_to_string(const SystemMonomial& m) const;

 private:
  std::vector<std::string> letters_;
  std::vector<std::vector<SystemMonomial>> rhs_;
};

using NCWord = std::vector<std::size_t>;

// Noncommutative series keeping only words of length <= max_len.
struct TruncatedNCSeries {
  std::size_t max_len = 0;
  std::map<NCWord, Integer> terms;

  friend bool operator==(const TruncatedNCSeries&, const TruncatedNCSeries&) = default;
};

// One substitution step S <- p(S), truncated to words of length <= max_len.
std::vector<TruncatedNCSeries> iterate_system(const ProperSystem& sys, const std::vector<TruncatedNCSeries>& current,
                                              std::size_t max_len);

// The unique solution restricted to words of length <= max_len, reached by
// iterating from 0 until the iterates stop changing.
std::vector<TruncatedNCSeries> solve_truncated(const ProperSystem& sys, std::size_t max_len);

// Membership in the Lukasiewicz language over {a, b}: |w|_b = |w|_a + 1 and
// |u|_a >= |u|_b for every proper prefix u.
bool lukasiewicz_predicate(std::string_view w);

// Lines `xi1 = a xi1 xi1 + b`; unknowns are xi<k> (1-based), any other name
// is a letter, monomials carry an optional integer prefix.
ProperSystem parse_system(std::string_view text);

// Word with letters juxtaposed when all names are one character, otherwise
// separated by spaces.
std::string word_to_string(const NCWord& w, const std::vector<std::string>& letters);

// One line per term, `coeff word`, words in (length, lexicographic) order.
std::string to_string(const TruncatedNCSeries& s, const std::vector<std::string>& letters);

}  // namespace nczeta
