#include "nczeta/kernel.hpp"

#include <algorithm>
#include <cstdlib>

#include "nczeta/errors.hpp"

namespace nczeta {

namespace {

void divide_by_content(IntegerVector& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// l * x for a multiple l of x's denominator.
mpz_class scaled(const mpz_class& l, const mpq_class& x) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return q * x.get_num();
}

}  // namespace

std::vector<IntegerVector> exact_kernel(const RationalMatrix& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ValidationError("ragged matrix passed to exact_kernel");

  std::vector<IntegerVector> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = scaled(l, r[j]);
    divide_by_content(row);
    a.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t best = a.size();
    for (std::size_t r = rank; r < a.size(); ++r)
      if (a[r][c] != 0 && (best == a.size() || abs(a[r][c]) > abs(a[best][c]))) best = r;
    if (best == a.size()) continue;
    std::swap(a[rank], a[best]);
    const mpz_class p = a[rank][c];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpz_class f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = p * a[r][j] - f * a[rank][j];
      divide_by_content(a[r]);
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<IntegerVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // v_f = 1, v_pc(r) = -a[r][f] / a[r][pc(r)], then cleared of denominators.
    std::vector<mpq_class> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = mpq_class(-a[r][f], a[r][pivot_col[r]]);
      v[pivot_col[r]].canonicalize();
    }
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = scaled(l, v[j]);
    divide_by_content(out);
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace nczeta
