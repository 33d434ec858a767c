#include "nczeta/series.hpp"

#include <algorithm>

#include "nczeta/errors.hpp"

namespace nczeta {

namespace {

void require_same_order(const Series& f, const Series& g) {
  if (f.order() != g.order())
    throw ValidationError("series order mismatch: " + std::to_string(f.order()) + " vs " +
                          std::to_string(g.order()));
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::one(std::size_t order) { return monomial(1, 0, order); }

Series Series::monomial(const Rational& c, std::size_t power, std::size_t order) {
  Series s(order);
  if (power <= order) s[power] = c;
  return s;
}

Series Series::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return Series(std::move(q));
}

Series Series::with_order(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), c.begin());
  return Series(std::move(c));
}

Series Series::shift_up(std::size_t k) const {
  Series s(order());
  for (std::size_t i = 0; i + k <= order(); ++i) s[i + k] = coeffs_[i];
  return s;
}

Series Series::shift_down(std::size_t k) const {
  if (k > order()) throw ValidationError("cannot divide a series of order " + std::to_string(order()) +
                                         " by t^" + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw ValidationError("series is not divisible by t^" + std::to_string(k));
  return Series(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Series& Series::operator+=(const Series& g) {
  require_same_order(*this, g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += g[k];
  return *this;
}

Series& Series::operator-=(const Series& g) {
  require_same_order(*this, g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= g[k];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator+(const Series& f, const Series& g) {
  Series r = f;
  r += g;
  return r;
}

Series operator-(const Series& f, const Series& g) {
  Series r = f;
  r -= g;
  return r;
}

Series operator-(const Series& f) {
  Series r = f;
  r *= Rational(-1);
  return r;
}

Series operator*(const Series& f, const Series& g) { return series_mul(f, g); }

Series operator*(const Rational& c, const Series& f) {
  Series r = f;
  r *= c;
  return r;
}

Series series_add(const Series& f, const Series& g) { return f + g; }

Series series_mul(const Series& f, const Series& g) {
  require_same_order(f, g);
  const std::size_t n = f.order();
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (g[j] != 0) r[i + j] += f[i] * g[j];
  }
  return r;
}

Series series_div(const Series& f, const Series& g) {
  require_same_order(f, g);
  if (g[0] == 0) throw ValidationError("division by a series with zero constant term");
  const std::size_t n = f.order();
  Series q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = f[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (g[j] != 0) acc -= g[j] * q[k - j];
    q[k] = acc / g[0];
  }
  return q;
}

Series series_pow(const Series& f, unsigned e) {
  Series r = Series::one(f.order());
  Series base = f;
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return r;
}

Series series_exp(const Series& f) {
  if (f[0] != 0) throw ValidationError("exp needs a series with zero constant term");
  const std::size_t n = f.order();
  Series g(n);
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (f[j] != 0) acc += Rational(static_cast<long>(j)) * f[j] * g[k - j];
    g[k] = acc / static_cast<long>(k);
  }
  return g;
}

Series series_log(const Series& f) {
  if (f[0] != 1) throw ValidationError("log needs a series with constant term 1");
  const std::size_t n = f.order();
  Series g(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * f[k];
    for (std::size_t j = 1; j < k; ++j)
      if (f[k - j] != 0) acc -= Rational(static_cast<long>(j)) * g[j] * f[k - j];
    g[k] = acc / static_cast<long>(k);
  }
  return g;
}

Series series_sqrt(const Series& f) {
  if (f[0] != 1) throw ValidationError("sqrt needs a series with constant term 1");
  const std::size_t n = f.order();
  Series g(n);
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = f[k];
    for (std::size_t j = 1; j < k; ++j) acc -= g[j] * g[k - j];
    g[k] = acc / 2;
  }
  return g;
}

Series derivative(const Series& f) {
  if (f.order() == 0) return Series(0);
  Series d(f.order() - 1);
  for (std::size_t k = 1; k <= f.order(); ++k) d[k - 1] = f[k] * static_cast<long>(k);
  return d;
}

Series log_derivative(const Series& f) {
  Series tf(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) tf[k] = f[k] * static_cast<long>(k);
  return series_div(tf, f);
}

Series rescale(const Series& f, const Rational& lambda) {
  Series r(f.order());
  Rational p = 1;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    r[k] = f[k] * p;
    p *= lambda;
  }
  return r;
}

bool is_integral(const Series& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Series generating_from_counts(std::span<const Integer> counts) {
  Series g(counts.size());
  for (std::size_t n = 1; n <= counts.size(); ++n) g[n] = counts[n - 1];
  return g;
}

Series zeta_from_counts(std::span<const Integer> counts) {
  Series h(counts.size());
  for (std::size_t n = 1; n <= counts.size(); ++n) h[n] = Rational(counts[n - 1], Integer(static_cast<unsigned long>(n)));
  for (std::size_t n = 1; n <= counts.size(); ++n) h[n].canonicalize();
  return series_exp(h);
}

std::string to_string(const Series& f) {
  std::string out;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    out += std::to_string(k);
    out += ": ";
    out += f[k].get_str();
    out += '\n';
  }
  return out;
}

}  // namespace nczeta
