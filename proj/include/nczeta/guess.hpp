#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "nczeta/series.hpp"

namespace nczeta {

// Integer polynomial P(t, y), stored as (t-degree, y-degree) -> coefficient.
class BivariatePolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;

  BivariatePolynomial() = default;

  void add(unsigned t_deg, unsigned y_deg, const Integer& c);
  Integer coeff(unsigned t_deg, unsigned y_deg) const;
  const std::map<Key, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned deg_t() const noexcept;
  unsigned deg_y() const noexcept;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Key, Integer> terms_;
};

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q);
BivariatePolynomial operator-(const BivariatePolynomial& p, const BivariatePolynomial& q);

// Divides by the content and makes the coefficient with the largest
// (y-degree, t-degree) positive. Throws on the zero polynomial.
BivariatePolynomial normalized(const BivariatePolynomial& p);

// P(lambda t, y).
BivariatePolynomial rescale_t(const BivariatePolynomial& p, const Integer& lambda);

// sum c_ij t^i f(t)^j at the order of f.
Series evaluate_at_series(const BivariatePolynomial& p, const Series& f);

// Smallest series order accepted by guess_annihilator for these bounds.
std::size_t required_guess_order(unsigned deg_t, unsigned deg_y);

// Searches (deg_y, deg_t) in lexicographic order for a nonzero P with
// P(t, f) = 0 to the order of f, via the exact kernel of the linear map
// (c_ij) -> coefficients of sum c_ij t^i f^j. The result only certifies
// vanishing up to the available truncation order.
std::optional<BivariatePolynomial> guess_annihilator(const Series& f, unsigned deg_t, unsigned deg_y);

// `c*t^i*y^j` terms sorted by (j, i), joined by ` + `.
std::string to_string(const BivariatePolynomial& p);
BivariatePolynomial parse_bivariate(std::string_view text);

}  // namespace nczeta
