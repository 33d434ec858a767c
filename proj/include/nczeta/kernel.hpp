#pragma once

#include <vector>

#include <gmpxx.h>

namespace nczeta {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
using IntegerVector = std::vector<mpz_class>;

// Basis of {v : A v = 0} for a rational matrix given by rows. Rows are scaled
// to integers and reduced by integer-preserving Gauss-Jordan elimination
// (pivot of largest absolute value, rows divided by their content after each
// update). One primitive integer vector per free column, in column order.
std::vector<IntegerVector> exact_kernel(const RationalMatrix& rows);

}  // namespace nczeta
