#include <doctest.h>

#include <random>

#include "nczeta/algebra_matrix.hpp"
#include "nczeta/builtins.hpp"
#include "nczeta/errors.hpp"
#include "nczeta/random_family.hpp"
#include "test_support.hpp"

using namespace nczeta;
using nczeta::testing::element;
using nczeta::testing::ints;

namespace {

// Words over {x, x^-1} of length n with as many x as x^-1, counted by
// enumerating all 2^n sign patterns.
Integer balanced_words(int n) {
  long count = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (2 * __builtin_popcount(mask) == n) ++count;
  return count;
}

AlgebraMatrix one_by_one(const AlgebraElement& e) {
  AlgebraMatrix m(1);
  m(0, 0) = e;
  return m;
}

}  // namespace

TEST_CASE("mat_multiply") {
  const auto m = build(ExampleId::two_by_two()).matrix;
  CHECK(mat_multiply(AlgebraMatrix::identity(2), m) == m);
  CHECK(mat_multiply(m, AlgebraMatrix::identity(2)) == m);

  const auto a = element({{{1}, 2}, {{-2}, 1}});
  const auto b = element({{{2, 1}, 1}});
  CHECK(mat_multiply(one_by_one(a), one_by_one(b)) == one_by_one(a * b));

  AlgebraMatrix e12(2), e21(2);
  e12(0, 1) = element({{{1}, 1}});
  e21(1, 0) = element({{{2}, 1}});
  const auto p = mat_multiply(e12, e21);
  CHECK(p(0, 0) == element({{{1, 2}, 1}}));
  CHECK(p(0, 1).is_zero());
  CHECK(p(1, 0).is_zero());
  CHECK(p(1, 1).is_zero());

  CHECK_THROWS_AS(mat_multiply(AlgebraMatrix(2), AlgebraMatrix(3)), ValidationError);
}

TEST_CASE("trace_coeff_one") {
  CHECK(trace_coeff_one(AlgebraMatrix::identity(4)) == 4);
  const auto m = build(ExampleId::two_by_two()).matrix;
  CHECK(trace_coeff_one(m) == 0);
  CHECK(trace_coeff_one(mat_multiply(m, m)) == 6);
}

TEST_CASE("a_sequence against brute-force word counting") {
  const auto omega = build(ExampleId::kontsevich(1)).matrix;
  const auto a = a_sequence(omega, 12);
  for (int n = 1; n <= 12; ++n) CHECK(a[static_cast<std::size_t>(n - 1)] == balanced_words(n));
  CHECK(a_sequence(omega, 4) == ints({0, 2, 0, 6}));
}

TEST_CASE("a_sequence golden values") {
  const auto m = build(ExampleId::two_by_two()).matrix;
  CHECK(a_sequence(m, 10) == ints({0, 6, 0, 30, 0, 174, 0, 1086, 0, 7086}));

  // Positive words only: nothing reduces to the identity.
  AlgebraMatrix positive(2);
  positive(0, 1) = element({{{1, 2}, 1}});
  positive(1, 0) = element({{{2}, 3}});
  positive(1, 1) = element({{{1}, 1}});
  for (const auto& v : a_sequence(positive, 9)) CHECK(v == 0);
}

TEST_CASE("a_sequence errors") {
  const auto m = build(ExampleId::two_by_two()).matrix;
  CHECK_THROWS_AS(a_sequence(m, 0), ValidationError);
  SequenceOptions tiny;
  tiny.max_terms = 10;
  try {
    a_sequence(m, 10, tiny);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("M^") != std::string::npos);
  }
}

TEST_CASE("a_n_oracle") {
  CHECK(a_n_oracle(build(ExampleId::kontsevich(1)).matrix, 2) == 2);
  CHECK(a_n_oracle(build(ExampleId::two_by_two()).matrix, 4) == 30);
  CHECK(a_n_oracle(build(ExampleId::kontsevich(2)).matrix, 2) == 4);
  CHECK_THROWS_AS(a_n_oracle(build(ExampleId::kontsevich(1)).matrix, 9), ResourceError);
  OracleOptions few;
  few.max_paths = 5;
  CHECK_THROWS_AS(a_n_oracle(build(ExampleId::two_by_two()).matrix, 4, few), ResourceError);
}

TEST_CASE("scalar_matrix rescales a_n by lambda^n") {
  const auto m = build(ExampleId::two_by_two()).matrix;
  CHECK(scalar_matrix(Integer(1), m) == m);
  const auto base = a_sequence(m, 8);
  for (long lambda : {-1L, 2L, 3L}) {
    const auto scaled = a_sequence(scalar_matrix(Integer(lambda), m), 8);
    Integer power(1);
    for (std::size_t n = 0; n < 8; ++n) {
      power *= lambda;
      CHECK(scaled[n] == power * base[n]);
    }
  }
  for (const auto& v : a_sequence(scalar_matrix(Integer(0), m), 5)) CHECK(v == 0);
}

TEST_CASE("pruning, oracle equivalence and cyclic trace on the random family") {
  std::mt19937_64 rng(101);
  SequenceOptions unpruned;
  unpruned.prune = false;
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng).matrix;
    const auto pruned = a_sequence(m, 6);
    CHECK(pruned == a_sequence(m, 6, unpruned));
    for (int n = 1; n <= 5; ++n) CHECK(a_n_oracle(m, n) == pruned[static_cast<std::size_t>(n - 1)]);

    auto other = random_matrix(rng).matrix;
    while (other.dim() != m.dim()) other = random_matrix(rng).matrix;
    CHECK(trace_coeff_one(mat_multiply(m, other)) == trace_coeff_one(mat_multiply(other, m)));
  }
}
