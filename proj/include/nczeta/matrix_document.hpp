#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nczeta/algebra_matrix.hpp"

namespace nczeta {

// Parsed matrix file:
//
//   # comment
//   dim 2
//   gens a b d            (optional; fixes generator ids)
//   [1,1] = a + a^-1
//   [1,2] = b
//
// Unassigned entries are zero. Generators not listed in `gens` are declared
// in order of first appearance.
struct MatrixDocument {
  struct Assignment {
    std::size_t row;  // 1-based
    std::size_t col;  // 1-based
    std::string source;
  };

  std::size_t dim = 0;
  std::vector<Assignment> assignments;
  NamedMatrix named{{}, AlgebraMatrix(1)};
};

MatrixDocument parse_matrix(std::string_view text);

// Matrix file text for `m`; parse_matrix(to_document_text(m)) reproduces it.
std::string to_document_text(const NamedMatrix& m);

}  // namespace nczeta
