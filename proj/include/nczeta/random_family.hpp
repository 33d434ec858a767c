#pragma once

#include <cstddef>
#include <random>

#include "nczeta/algebra_matrix.hpp"

namespace nczeta {

// Shape of randomly drawn small matrices used by property tests and the
// `selfcheck` command.
struct RandomFamily {
  std::size_t max_dim = 3;
  std::size_t max_support = 2;
  std::size_t max_word_length = 2;
  int max_abs_coeff = 3;
  int generators = 2;
};

// A random matrix of the family. Entries may be zero; words are reduced
// words over x1..x<generators> (including the identity).
NamedMatrix random_matrix(std::mt19937_64& rng, const RandomFamily& family = {});

}  // namespace nczeta
