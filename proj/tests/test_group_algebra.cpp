#include <doctest.h>

#include <random>

#include "nczeta/errors.hpp"
#include "nczeta/group_algebra.hpp"
#include "test_support.hpp"

using namespace nczeta;
using nczeta::testing::element;
using nczeta::testing::random_element;
using nczeta::testing::word;

namespace {
constexpr Letter x = 1, y = 2;
}

TEST_CASE("add drops cancelled terms") {
  CHECK(add(element({{{x}, 1}}), element({{{x}, -1}})).is_zero());
  CHECK(add(element({{{x}, 1}, {{y}, 1}}), element({{{y}, 1}})) == element({{{x}, 1}, {{y}, 2}}));
  const auto a = element({{{x, y}, 3}, {{}, -2}});
  CHECK(add(a, AlgebraElement{}) == a);
}

TEST_CASE("multiply is the convolution product") {
  const auto omega = element({{{x}, 1}, {{-x}, 1}});
  CHECK(omega * omega == element({{{x, x}, 1}, {{}, 2}, {{-x, -x}, 1}}));
  CHECK(element({{{x}, 1}}) * element({{{y}, 1}}) == element({{{x, y}, 1}}));
  CHECK(element({{{y}, 1}}) * element({{{x}, 1}}) == element({{{y, x}, 1}}));
  CHECK(element({{{x}, 1}}) * element({{{y}, 1}}) != element({{{y}, 1}}) * element({{{x}, 1}}));
  CHECK(omega * element({{{y}, 1}}) == element({{{x, y}, 1}, {{-x, y}, 1}}));
}

TEST_CASE("coeff reads stored coefficients") {
  const auto omega = element({{{x}, 1}, {{-x}, 1}});
  CHECK(coeff(omega * omega, ReducedWord{}) == 2);
  CHECK(coeff(AlgebraElement{}, ReducedWord{}) == 0);
  CHECK(coeff(element({{{x, -y}, 3}}), word({x, -y})) == 3);
}

TEST_CASE("scalar_multiply") {
  const auto a = element({{{x}, 1}, {{y}, 1}});
  CHECK(scalar_multiply(Integer(2), a) == element({{{x}, 2}, {{y}, 2}}));
  CHECK(scalar_multiply(Integer(0), a).is_zero());
  CHECK(add(a, scalar_multiply(Integer(-1), a)).is_zero());
}

TEST_CASE("ring axioms and trace-form symmetry on random elements") {
  std::mt19937_64 rng(3);
  const AlgebraElement one = AlgebraElement::one();
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(rng);
    const auto b = random_element(rng);
    const auto c = random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK(a + b == b + a);

    Integer pairing(0);
    for (const auto& [g, cg] : a.terms()) pairing += cg * b.coeff(invert(g));
    CHECK(coeff(a * b, ReducedWord{}) == pairing);
    CHECK(coeff(a * b, ReducedWord{}) == coeff(b * a, ReducedWord{}));
  }
}

TEST_CASE("polynomial display and parse") {
  GeneratorTable table{"a", "b", "d"};
  const auto a = element({{{1, -2}, 3}, {{}, -1}, {{3}, 1}});
  CHECK(to_string(a, table) == "-1*1 + d + 3*a b^-1");
  CHECK(parse_element("3*a b^-1 + -1*1 + d", table) == a);
  CHECK(parse_element("3 a b^-1 - 1 + d", table) == a);
  CHECK(parse_element("x + x^-1 - x", table) == element({{{-4}, 1}}));
  CHECK(parse_element("0", table).is_zero());
  CHECK(to_string(AlgebraElement{}, table) == "0");
  CHECK_THROWS_AS(parse_element("a +", table), ParseError);
  CHECK_THROWS_AS(parse_element("a * b", table), ParseError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_element(rng);
    CHECK(parse_element(to_string(r, table), table) == r);
  }
}
