#include "nczeta/random_family.hpp"

#include <string>
#include <vector>

namespace nczeta {

NamedMatrix random_matrix(std::mt19937_64& rng, const RandomFamily& family) {
  std::uniform_int_distribution<std::size_t> dim_dist(1, family.max_dim);
  std::uniform_int_distribution<std::size_t> support_dist(0, family.max_support);
  std::uniform_int_distribution<std::size_t> length_dist(0, family.max_word_length);
  std::uniform_int_distribution<int> letter_dist(1, family.generators);
  std::uniform_int_distribution<int> coeff_dist(-family.max_abs_coeff, family.max_abs_coeff);
  std::bernoulli_distribution inverse(0.5);

  NamedMatrix out{{}, AlgebraMatrix(dim_dist(rng))};
  for (int k = 1; k <= family.generators; ++k) out.generators.declare("x" + std::to_string(k));
  for (std::size_t i = 0; i < out.matrix.dim(); ++i) {
    for (std::size_t j = 0; j < out.matrix.dim(); ++j) {
      const std::size_t support = support_dist(rng);
      for (std::size_t s = 0; s < support; ++s) {
        std::vector<Letter> raw(length_dist(rng));
        for (auto& l : raw) l = inverse(rng) ? -letter_dist(rng) : letter_dist(rng);
        out.matrix(i, j).add_term(ReducedWord::reduce(raw), Integer(coeff_dist(rng)));
      }
    }
  }
  return out;
}

}  // namespace nczeta
