#pragma once

#include "nczeta/free_group.hpp"
#include "nczeta/group_algebra.hpp"
#include "scanner.hpp"

namespace nczeta::detail {

// Word at the cursor; stops before the first character that cannot continue it.
ReducedWord parse_word_at(Scanner& in, GeneratorTable& table);

// Signed sum of terms `c * w`; stops at end of input.
AlgebraElement parse_element_at(Scanner& in, GeneratorTable& table);

}  // namespace nczeta::detail
