#include <doctest.h>

#include <algorithm>
#include <random>

#include "nczeta/kernel.hpp"

using namespace nczeta;

namespace {

RationalMatrix matrix_of(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix out;
  for (const auto& r : rows) {
    std::vector<mpq_class> row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

bool annihilates(const RationalMatrix& a, const IntegerVector& v) {
  for (const auto& row : a) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact_kernel small cases") {
  CHECK(exact_kernel(matrix_of({{1, 0}, {0, 1}})).empty());
  const auto k = exact_kernel(matrix_of({{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntegerVector{1, 1});
}

TEST_CASE("exact_kernel handles rational rows") {
  RationalMatrix a(1, std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 3)});
  const auto k = exact_kernel(a);
  REQUIRE(k.size() == 1);
  CHECK(annihilates(a, k[0]));
  CHECK(k[0] == IntegerVector{-2, 3});
}

TEST_CASE("exact_kernel on rank-deficient matrices with a planted kernel") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> v(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    // A = R (I - K (K^T K)^-1 K^T) kills the two columns of K; the last row
    // is the sum of the first two, so rank A <= 3 and the kernel has
    // dimension >= 3.
    std::vector<IntegerVector> k(2, IntegerVector(6));
    for (auto& col : k)
      for (auto& x : col) x = v(rng);
    mpq_class g00 = 0, g01 = 0, g11 = 0;
    for (int j = 0; j < 6; ++j) {
      g00 += k[0][j] * k[0][j];
      g01 += k[0][j] * k[1][j];
      g11 += k[1][j] * k[1][j];
    }
    const mpq_class det = g00 * g11 - g01 * g01;
    if (det == 0) continue;
    const mpq_class i00 = g11 / det, i01 = -g01 / det, i11 = g00 / det;
    RationalMatrix proj(6, std::vector<mpq_class>(6));
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const mpq_class kk = k[0][r] * (i00 * k[0][c] + i01 * k[1][c]) + k[1][r] * (i01 * k[0][c] + i11 * k[1][c]);
        proj[r][c] = (r == c ? mpq_class(1) : mpq_class(0)) - kk;
      }
    RationalMatrix a(4, std::vector<mpq_class>(6));
    for (int r = 0; r < 3; ++r) {
      std::vector<long> row(6);
      for (auto& x : row) x = v(rng);
      for (int c = 0; c < 6; ++c)
        for (int j = 0; j < 6; ++j) a[r][c] += row[j] * proj[j][c];
    }
    for (int c = 0; c < 6; ++c) a[3][c] = a[0][c] + a[1][c];
    for (const auto& col : k) CHECK(annihilates(a, col));

    const auto basis = exact_kernel(a);
    CHECK(basis.size() >= 3);
    for (const auto& b : basis) {
      CHECK(annihilates(a, b));
      CHECK(std::any_of(b.begin(), b.end(), [](const mpz_class& x) { return x != 0; }));
    }
    // The planted vectors lie in the span: appending one to the basis as a
    // row keeps the row space dimension (kernel of the stacked transpose
    // grows by exactly one).
    RationalMatrix stacked_t(6, std::vector<mpq_class>(basis.size() + 1));
    for (int j = 0; j < 6; ++j) {
      for (std::size_t b = 0; b < basis.size(); ++b) stacked_t[j][b] = basis[b][j];
      stacked_t[j][basis.size()] = k[0][j];
    }
    CHECK(exact_kernel(stacked_t).size() == 1);
  }
}
