#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nczeta/group_algebra.hpp"

namespace nczeta {

using Rational = mpq_class;

// Power series over Q truncated after t^order. Binary operations require
// equal orders.
class Series {
 public:
  // The zero series of the given order.
  explicit Series(std::size_t order = 0);
  // Coefficients of t^0 .. t^(coeffs.size() - 1); order is coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series one(std::size_t order);
  static Series monomial(const Rational& c, std::size_t power, std::size_t order);
  static Series from_integers(std::span<const Integer> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  // Same series at a different truncation order (zero-padded when raised).
  Series with_order(std::size_t order) const;
  // Multiplies by t^k, keeping the order.
  Series shift_up(std::size_t k) const;
  // Divides by t^k; the dropped coefficients must vanish. Order drops by k.
  Series shift_down(std::size_t k) const;

  Series& operator+=(const Series& g);
  Series& operator-=(const Series& g);
  Series& operator*=(const Rational& c);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
Series operator*(const Rational& c, const Series& f);

Series series_add(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);
Series series_div(const Series& f, const Series& g);
Series series_pow(const Series& f, unsigned e);

// The next three solve the defining differential equation coefficient by
// coefficient: g' = f'g for exp, f g' = f' for log, 2 g g' = f' for sqrt.
Series series_exp(const Series& f);
Series series_log(const Series& f);
Series series_sqrt(const Series& f);

Series derivative(const Series& f);
// t f'/f at the order of f.
Series log_derivative(const Series& f);
// Coefficient k multiplied by lambda^k.
Series rescale(const Series& f, const Rational& lambda);
bool is_integral(const Series& f);

// sum a_n t^n with a = [a_1, ..., a_N]; order N.
Series generating_from_counts(std::span<const Integer> counts);
// exp(sum a_n t^n / n); order N.
Series zeta_from_counts(std::span<const Integer> counts);

// One line per coefficient, `k: p/q` (`k: p` for integers).
std::string to_string(const Series& f);

}  // namespace nczeta
