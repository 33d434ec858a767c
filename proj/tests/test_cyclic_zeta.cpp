#include <doctest.h>

#include <algorithm>
#include <random>

#include "nczeta/builtins.hpp"
#include "nczeta/cyclic_zeta.hpp"
#include "nczeta/errors.hpp"
#include "nczeta/random_family.hpp"
#include "test_support.hpp"

using namespace nczeta;
using nczeta::testing::series_of;
using nczeta::testing::word;

namespace {

using IndexWord = std::vector<std::size_t>;

// All words of length n over q letters, in lexicographic order.
std::vector<IndexWord> all_words(std::size_t q, std::size_t n) {
  std::vector<IndexWord> out;
  IndexWord w(n, 0);
  for (;;) {
    out.push_back(w);
    std::size_t k = n;
    while (k > 0 && w[k - 1] == q - 1) w[--k] = 0;
    if (k == 0) return out;
    ++w[k - 1];
  }
}

// Strictly smaller than every other rotation.
bool brute_lyndon(const IndexWord& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    IndexWord rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

TripleWord letters_of(const std::vector<TripleLetter>& alphabet, const IndexWord& w) {
  TripleWord out;
  for (auto i : w) out.push_back(alphabet[i]);
  return out;
}

TripleWord power(const TripleWord& w, int r) {
  TripleWord out;
  for (int k = 0; k < r; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

TEST_CASE("alphabet_of") {
  const auto omega = alphabet_of(build(ExampleId::kontsevich(1)).matrix);
  REQUIRE(omega.size() == 2);
  CHECK(omega[0] == TripleLetter{word({1}), 0, 0});
  CHECK(omega[1] == TripleLetter{word({-1}), 0, 0});

  // a, b, d are generators 1, 2, 3.
  const auto m = alphabet_of(build(ExampleId::two_by_two()).matrix);
  const std::vector<TripleLetter> expected{{word({1}), 0, 0},  {word({-1}), 0, 0}, {word({2}), 0, 1},
                                           {word({-2}), 1, 0}, {word({3}), 1, 1},  {word({-3}), 1, 1}};
  CHECK(m == expected);
  CHECK(alphabet_of(AlgebraMatrix(3)).empty());
}

TEST_CASE("s_coeff") {
  const auto omega_m = build(ExampleId::kontsevich(1)).matrix;
  const auto omega = alphabet_of(omega_m);
  CHECK(s_coeff(omega_m, TripleWord{omega[0], omega[1]}) == 1);
  CHECK(s_coeff(omega_m, TripleWord{omega[0]}) == 0);
  CHECK(s_coeff(omega_m, TripleWord{}) == 1);

  const auto m = build(ExampleId::two_by_two()).matrix;
  const auto alpha = alphabet_of(m);
  const TripleWord bb{alpha[2], alpha[3]};
  CHECK(s_coeff(m, bb) == 1);
  CHECK(s_coeff(m, power(bb, 2)) == 1);
  CHECK(s_coeff(m, TripleWord{}) == 2);
  // b then a: the index path does not continue.
  CHECK(s_coeff(m, TripleWord{alpha[2], alpha[0]}) == 0);
  CHECK_THROWS_AS(s_coeff(m, TripleWord{TripleLetter{word({1}), 0, 1}}), ValidationError);

  AlgebraMatrix weighted(1);
  weighted(0, 0) = nczeta::testing::element({{{1}, 3}, {{-1}, -2}});
  const auto wa = alphabet_of(weighted);
  CHECK(s_coeff(weighted, TripleWord{wa[0], wa[1]}) == -6);
}

TEST_CASE("lyndon_words") {
  const auto two = lyndon_words(2, 2);
  CHECK(two.words == std::vector<IndexWord>{{0}, {1}, {0, 1}});

  const auto four = lyndon_words(2, 4);
  const std::vector<IndexWord> expected{{0},       {1},          {0, 1},       {0, 0, 1},
                                        {0, 1, 1}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}};
  CHECK(four.words == expected);

  const auto six = lyndon_words(6, 3);
  CHECK(std::count_if(six.words.begin(), six.words.end(), [](const auto& w) { return w.size() == 3; }) == 70);

  CHECK_THROWS_AS(lyndon_words(0, 3), ValidationError);
}

TEST_CASE("lyndon_words agrees with a rotation filter and covers every word once") {
  for (std::size_t q = 1; q <= 4; ++q) {
    const std::size_t max_len = q <= 2 ? 7 : 4;
    const auto list = lyndon_words(q, max_len);
    std::vector<IndexWord> brute;
    for (std::size_t n = 1; n <= max_len; ++n)
      for (auto& w : all_words(q, n))
        if (brute_lyndon(w)) brute.push_back(w);
    CHECK(list.words == brute);
    for (const auto& w : list.words) CHECK(is_lyndon(w));

    // sum over m | n of m * #Lyndon(m) = q^n
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_len, 4); ++n) {
      std::size_t mass = 0;
      for (const auto& w : list.words)
        if (n % w.size() == 0) mass += w.size();
      std::size_t qn = 1;
      for (std::size_t k = 0; k < n; ++k) qn *= q;
      CHECK(mass == qn);
    }
  }
}

TEST_CASE("euler_product") {
  CHECK(euler_product(build(ExampleId::kontsevich(1)).matrix, 4) == series_of({1, 0, 1, 0, 2}));
  CHECK(euler_product(build(ExampleId::two_by_two()).matrix, 6) == series_of({1, 0, 3, 0, 12, 0, 56}));
  CHECK(euler_product(AlgebraMatrix(2), 5) == Series::one(5));
  EnumerationOptions tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(euler_product(build(ExampleId::two_by_two()).matrix, 6, tiny), ResourceError);
}

TEST_CASE("euler_product of a weighted matrix matches a plain Lyndon enumeration") {
  // The pruned walk must agree with the product over the full Lyndon list.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = random_matrix(rng).matrix;
    const auto alpha = alphabet_of(m);
    if (alpha.empty()) continue;
    const std::size_t len = alpha.size() > 8 ? 3 : 4;
    Series expected = Series::one(len);
    for (const auto& w : lyndon_words(alpha.size(), len).words) {
      const Integer c = s_coeff(m, letters_of(alpha, w));
      if (c == 0) continue;
      Series factor = Series::one(len) - Series::monomial(Rational(c), w.size(), len);
      expected = series_div(expected, factor);
    }
    CHECK(euler_product(m, len) == expected);
  }
}

TEST_CASE("sum_coeffs_by_length") {
  CHECK(sum_coeffs_by_length(build(ExampleId::kontsevich(1)).matrix, 2) == 2);
  CHECK(sum_coeffs_by_length(build(ExampleId::two_by_two()).matrix, 2) == 6);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng).matrix;
    CHECK(sum_coeffs_by_length(m, 1) == trace_coeff_one(m));
  }
}

TEST_CASE("S_M is cyclic") {
  std::mt19937_64 rng(47);
  int nonzero = 0;
  int cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = trial % 3 == 0 ? build(ExampleId::two_by_two()).matrix : random_matrix(rng).matrix;
    const auto alpha = alphabet_of(m);
    if (alpha.empty()) continue;
    // Words with a consistent index path, so that nonzero values occur.
    std::uniform_int_distribution<std::size_t> len_dist(1, 5);
    for (int k = 0; k < 8; ++k) {
      IndexWord w;
      const std::size_t len = len_dist(rng);
      std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
      w.push_back(pick(rng));
      while (w.size() < len) {
        std::vector<std::size_t> next;
        for (std::size_t a = 0; a < alpha.size(); ++a)
          if (alpha[a].row == alpha[w.back()].col) next.push_back(a);
        if (next.empty()) break;
        w.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
      }
      const auto word_letters = letters_of(alpha, w);
      const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      TripleWord u(word_letters.begin(), word_letters.begin() + static_cast<std::ptrdiff_t>(cut));
      TripleWord v(word_letters.begin() + static_cast<std::ptrdiff_t>(cut), word_letters.end());
      TripleWord uv = u, vu = v;
      uv.insert(uv.end(), v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      const Integer c = s_coeff(m, uv);
      CHECK(c == s_coeff(m, vu));
      for (int r : {2, 3}) {
        Integer cr;
        mpz_pow_ui(cr.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(r));
        CHECK(s_coeff(m, power(word_letters, r)) == cr);
      }
      if (c != 0) ++nonzero;
      ++cases;
    }
  }
  CHECK(cases >= 200);
  CHECK(nonzero >= 10);
}
