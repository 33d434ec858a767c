#pragma once

#include <string>
#include <string_view>

#include "nczeta/algebra_matrix.hpp"
#include "nczeta/series.hpp"

namespace nczeta {

// The built-in matrix families.
//   kontsevich(n): 1x1 matrix [x1 + x1^-1 + ... + xn + xn^-1]
//   two_by_two:    [[a + a^-1, b], [b^-1, d + d^-1]]
//   d_by_d(d):     a_i + a_i^-1 on the diagonal, b_ij above it and b_ji^-1
//                  below it (d >= 3)
struct ExampleId {
  enum class Kind { kontsevich, two_by_two, d_by_d };
  Kind kind;
  int param = 0;

  static ExampleId kontsevich(int n_gens) { return {Kind::kontsevich, n_gens}; }
  static ExampleId two_by_two() { return {Kind::two_by_two, 2}; }
  static ExampleId d_by_d(int d) { return {Kind::d_by_d, d}; }

  friend bool operator==(const ExampleId&, const ExampleId&) = default;
};

// Names `kontsevich:n`, `paper2x2`, `paperdxd:d`.
ExampleId parse_example_id(std::string_view name);
std::string to_string(const ExampleId& id);

NamedMatrix build(const ExampleId& id);

// g_M from its closed form, order N. Available for two_by_two and d_by_d.
Series closed_g(const ExampleId& id, std::size_t order);

// P_M from its closed form, order N. Available for kontsevich and two_by_two.
Series closed_P(const ExampleId& id, std::size_t order);

// Known expansion of P_M through t^8 for the d_by_d family, as polynomials
// in d; order N <= 8.
Series dxd_P_prefix(int d, std::size_t order);

// u with u(1 - c u) = t^2, u(0) = 0, i.e. u = (1 - sqrt(1 - 4 c t^2)) / (2c).
// c = 2 is the auxiliary series of two_by_two, c = d that of d_by_d.
Series quadratic_u_series(int c, std::size_t order);

// 3 * 2^n / ((n+2)(n+3)) * binom(2n+2, n+1): coefficient of t^(2n) in P_M of
// two_by_two.
Rational two_by_two_P_coefficient(unsigned n);

}  // namespace nczeta
