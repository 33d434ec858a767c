#include "nczeta/builtins.hpp"

#include <charconv>

#include "nczeta/errors.hpp"

namespace nczeta {

namespace {

int parse_parameter(std::string_view text, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("bad parameter in built-in name '" + std::string(whole) + "'");
  return v;
}

void check(const ExampleId& id) {
  switch (id.kind) {
    case ExampleId::Kind::kontsevich:
      if (id.param < 1) throw ValidationError("kontsevich needs at least one generator");
      break;
    case ExampleId::Kind::two_by_two:
      break;
    case ExampleId::Kind::d_by_d:
      if (id.param < 3) throw ValidationError("paperdxd needs d >= 3");
      break;
  }
}

// x + x^-1
AlgebraElement symmetric_letter(int id) {
  return AlgebraElement(ReducedWord::letter(id)) + AlgebraElement(ReducedWord::letter(-id));
}

Series sqrt_one_minus(const Rational& c, std::size_t order) {
  // (1 - c t^2)^(1/2)
  Series s = Series::one(order) - Series::monomial(c, 2, order);
  return series_sqrt(s);
}

}  // namespace

ExampleId parse_example_id(std::string_view name) {
  if (name == "paper2x2") return ExampleId::two_by_two();
  ExampleId id{};
  if (name.starts_with("kontsevich:"))
    id = ExampleId::kontsevich(parse_parameter(name.substr(11), name));
  else if (name.starts_with("paperdxd:"))
    id = ExampleId::d_by_d(parse_parameter(name.substr(9), name));
  else
    throw ValidationError("unknown built-in '" + std::string(name) +
                          "' (expected kontsevich:<n>, paper2x2 or paperdxd:<d>)");
  check(id);
  return id;
}

std::string to_string(const ExampleId& id) {
  switch (id.kind) {
    case ExampleId::Kind::kontsevich:
      return "kontsevich:" + std::to_string(id.param);
    case ExampleId::Kind::two_by_two:
      return "paper2x2";
    case ExampleId::Kind::d_by_d:
      return "paperdxd:" + std::to_string(id.param);
  }
  return {};
}

NamedMatrix build(const ExampleId& id) {
  check(id);
  switch (id.kind) {
    case ExampleId::Kind::kontsevich: {
      NamedMatrix out{{}, AlgebraMatrix(1)};
      for (int k = 1; k <= id.param; ++k)
        out.matrix(0, 0) += symmetric_letter(out.generators.declare("x" + std::to_string(k)));
      return out;
    }
    case ExampleId::Kind::two_by_two: {
      NamedMatrix out{GeneratorTable{"a", "b", "d"}, AlgebraMatrix(2)};
      out.matrix(0, 0) = symmetric_letter(1);
      out.matrix(0, 1) = AlgebraElement(ReducedWord::letter(2));
      out.matrix(1, 0) = AlgebraElement(ReducedWord::letter(-2));
      out.matrix(1, 1) = symmetric_letter(3);
      return out;
    }
    case ExampleId::Kind::d_by_d: {
      const auto d = static_cast<std::size_t>(id.param);
      NamedMatrix out{{}, AlgebraMatrix(d)};
      for (std::size_t i = 1; i <= d; ++i) out.generators.declare("a" + std::to_string(i));
      const auto b_name = [d](std::size_t i, std::size_t j) {
        return d < 10 ? "b" + std::to_string(i) + std::to_string(j)
                      : "b" + std::to_string(i) + "_" + std::to_string(j);
      };
      for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j) out.generators.declare(b_name(i, j));
      for (std::size_t i = 0; i < d; ++i) {
        out.matrix(i, i) = symmetric_letter(static_cast<int>(i + 1));
        for (std::size_t j = i + 1; j < d; ++j) {
          const int b = *out.generators.find(b_name(i + 1, j + 1));
          out.matrix(i, j) = AlgebraElement(ReducedWord::letter(b));
          out.matrix(j, i) = AlgebraElement(ReducedWord::letter(-b));
        }
      }
      return out;
    }
  }
  throw ValidationError("unknown built-in kind");
}

Series closed_g(const ExampleId& id, std::size_t order) {
  check(id);
  if (id.kind == ExampleId::Kind::kontsevich)
    throw ValidationError("no closed form for g of kontsevich:n is built in; use closed_P and t P'/P");
  // Both families share d(d+1)/2 * ((1 - 4d t^2)^(1/2) - 1 + 2(d+1) t^2) / (1 - (d+1)^2 t^2);
  // two_by_two is the case d = 2: 3 ((1 - 8t^2)^(1/2) - 1 + 6t^2) / (1 - 9t^2).
  const long d = id.param;
  Series num = sqrt_one_minus(Rational(4 * d), order) - Series::one(order) +
               Series::monomial(Rational(2 * (d + 1)), 2, order);
  Series den = Series::one(order) - Series::monomial(Rational((d + 1) * (d + 1)), 2, order);
  return Rational(d * (d + 1), 2) * series_div(num, den);
}

Series closed_P(const ExampleId& id, std::size_t order) {
  check(id);
  switch (id.kind) {
    case ExampleId::Kind::two_by_two: {
      // ((1 - 8t^2)^(3/2) - 1 + 12 t^2 - 24 t^4) / (32 t^6)
      const std::size_t n = order + 6;
      const Series base = Series::one(n) - Series::monomial(8, 2, n);
      Series num = base * series_sqrt(base) - Series::one(n) + Series::monomial(12, 2, n) -
                   Series::monomial(24, 4, n);
      return Rational(1, 32) * num.shift_down(6);
    }
    case ExampleId::Kind::kontsevich: {
      // 2^n / (2n-1)^(n-1) * (n - 1 + n s)^(n-1) / (1 + s)^n, s = (1 - 4(2n-1) t^2)^(1/2)
      const long n = id.param;
      const Series s = sqrt_one_minus(Rational(4 * (2 * n - 1)), order);
      const Series one = Series::one(order);
      Series top = series_pow(Rational(n - 1) * one + Rational(n) * s, static_cast<unsigned>(n - 1));
      Series bottom = series_pow(one + s, static_cast<unsigned>(n));
      mpz_class two_n;
      mpz_class odd_pow;
      mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
      mpz_ui_pow_ui(odd_pow.get_mpz_t(), static_cast<unsigned long>(2 * n - 1), static_cast<unsigned long>(n - 1));
      Rational prefactor(two_n, odd_pow);
      prefactor.canonicalize();
      return prefactor * series_div(top, bottom);
    }
    case ExampleId::Kind::d_by_d:
      throw ValidationError("no closed formula for P_M is known for paperdxd:" + std::to_string(id.param) +
                            "; use dxd_P_prefix (through t^8) or the pipeline");
  }
  throw ValidationError("unknown built-in kind");
}

Series dxd_P_prefix(int d, std::size_t order) {
  if (d < 3) throw ValidationError("paperdxd needs d >= 3");
  if (order > 8) throw ValidationError("the d x d expansion is only known through t^8");
  const mpz_class x = d;
  const mpz_class base = x * (x + 1);
  Series p = Series::one(order);
  const auto set = [&](std::size_t k, const mpz_class& poly, long denom) {
    if (k <= order) p[k] = Rational(base * poly, mpz_class(denom));
    if (k <= order) p[k].canonicalize();
  };
  set(2, mpz_class(1), 2);
  set(4, x * x + 5 * x + 2, 8);
  const mpz_class x2 = x * x;
  const mpz_class x3 = x2 * x;
  const mpz_class x4 = x3 * x;
  set(6, x4 + 14 * x3 + 59 * x2 + 38 * x + 8, 48);
  set(8, x4 * x2 + 27 * x4 * x + 271 * x4 + 1105 * x3 + 904 * x2 + 332 * x + 48, 384);
  return p;
}

Series quadratic_u_series(int c, std::size_t order) {
  const Series s = sqrt_one_minus(Rational(4 * c), order);
  return Rational(1, 2 * c) * (Series::one(order) - s);
}

Rational two_by_two_P_coefficient(unsigned n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n + 2, n + 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  Rational r(3 * two_n * binom, mpz_class((n + 2) * (n + 3)));
  r.canonicalize();
  return r;
}

}  // namespace nczeta
