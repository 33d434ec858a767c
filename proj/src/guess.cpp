#include "nczeta/guess.hpp"

#include <algorithm>
#include <vector>

#include "nczeta/errors.hpp"
#include "nczeta/kernel.hpp"
#include "scanner.hpp"

namespace nczeta {

void BivariatePolynomial::add(unsigned t_deg, unsigned y_deg, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({t_deg, y_deg}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BivariatePolynomial::coeff(unsigned t_deg, unsigned y_deg) const {
  auto it = terms_.find({t_deg, y_deg});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BivariatePolynomial::deg_t() const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

unsigned BivariatePolynomial::deg_y() const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial r;
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) r.add(a.first + b.first, a.second + b.second, ca * cb);
  return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial r = p;
  for (const auto& [k, c] : q.terms()) r.add(k.first, k.second, -c);
  return r;
}

BivariatePolynomial normalized(const BivariatePolynomial& p) {
  if (p.is_zero()) throw ValidationError("cannot normalise the zero polynomial");
  Integer g = 0;
  for (const auto& [k, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  const auto lead = std::max_element(p.terms().begin(), p.terms().end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
  });
  if (lead->second < 0) g = -g;
  BivariatePolynomial r;
  for (const auto& [k, c] : p.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    r.add(k.first, k.second, q);
  }
  return r;
}

BivariatePolynomial rescale_t(const BivariatePolynomial& p, const Integer& lambda) {
  BivariatePolynomial r;
  for (const auto& [k, c] : p.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), lambda.get_mpz_t(), k.first);
    r.add(k.first, k.second, c * power);
  }
  return r;
}

Series evaluate_at_series(const BivariatePolynomial& p, const Series& f) {
  const std::size_t n = f.order();
  Series result(n);
  Series power = Series::one(n);
  for (unsigned j = 0; j <= p.deg_y(); ++j) {
    if (j > 0) power = power * f;
    for (unsigned i = 0; i <= p.deg_t() && i <= n; ++i) {
      const Integer c = p.coeff(i, j);
      if (c == 0) continue;
      for (std::size_t k = 0; k + i <= n; ++k) result[k + i] += Rational(c) * power[k];
    }
  }
  return result;
}

std::size_t required_guess_order(unsigned deg_t, unsigned deg_y) {
  return (static_cast<std::size_t>(deg_t) + 1) * (static_cast<std::size_t>(deg_y) + 1) + 8;
}

std::optional<BivariatePolynomial> guess_annihilator(const Series& f, unsigned deg_t, unsigned deg_y) {
  const std::size_t need = required_guess_order(deg_t, deg_y);
  if (f.order() < need)
    throw ValidationError("series order " + std::to_string(f.order()) + " is too low for bounds (deg_t " +
                          std::to_string(deg_t) + ", deg_y " + std::to_string(deg_y) + "); required order is " +
                          std::to_string(need));
  const std::size_t n = f.order();
  std::vector<Series> powers{Series::one(n)};
  for (unsigned j = 1; j <= deg_y; ++j) powers.push_back(powers.back() * f);

  for (unsigned dy = 1; dy <= deg_y; ++dy) {
    for (unsigned dt = 0; dt <= deg_t; ++dt) {
      std::vector<BivariatePolynomial::Key> columns;
      for (unsigned j = 0; j <= dy; ++j)
        for (unsigned i = 0; i <= dt; ++i) columns.emplace_back(i, j);
      RationalMatrix rows(n + 1, std::vector<mpq_class>(columns.size()));
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto [i, j] = columns[c];
        for (std::size_t k = 0; k + i <= n; ++k) rows[k + i][c] = powers[j][k];
      }
      const auto kernel = exact_kernel(rows);
      if (kernel.empty()) continue;
      BivariatePolynomial p;
      for (std::size_t c = 0; c < columns.size(); ++c) p.add(columns[c].first, columns[c].second, kernel.front()[c]);
      return normalized(p);
    }
  }
  return std::nullopt;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BivariatePolynomial::Key, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
  });
  std::string out;
  for (const auto& [k, c] : terms) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    if (k.first == 1) out += "*t";
    if (k.first > 1) out += "*t^" + std::to_string(k.first);
    if (k.second == 1) out += "*y";
    if (k.second > 1) out += "*y^" + std::to_string(k.second);
  }
  return out;
}

BivariatePolynomial parse_bivariate(std::string_view text) {
  detail::Scanner in(text);
  if (in.at_end()) in.fail("empty polynomial");
  BivariatePolynomial p;
  bool first = true;
  while (!in.at_end()) {
    int sign = 1;
    if (!first && !in.accept('+')) {
      if (!in.accept('-')) in.fail("expected '+' or '-'");
      sign = -1;
    }
    while (in.peek() == '+' || in.peek() == '-')
      if (in.accept('-')) sign = -sign;
      else in.accept('+');
    Integer c(1);
    bool any = false;
    if (in.at_digit()) {
      c = in.integer();
      any = true;
    }
    unsigned i = 0;
    unsigned j = 0;
    for (;;) {
      const std::size_t mark = in.position();
      const bool starred = any && in.accept('*');
      if (!in.at_identifier()) {
        if (starred) in.fail("expected t or y after '*'");
        in.rewind(mark);
        break;
      }
      const std::size_t name_pos = in.position();
      const std::string name = in.identifier();
      if (name != "t" && name != "y") in.fail_at(name_pos, "unknown variable '" + name + "'");
      unsigned e = 1;
      if (in.accept('^')) e = static_cast<unsigned>(in.small_integer(100000));
      (name == "t" ? i : j) += e;
      any = true;
    }
    if (!any) in.fail("expected a term");
    p.add(i, j, sign > 0 ? c : Integer(-c));
    first = false;
  }
  return p;
}

}  // namespace nczeta
