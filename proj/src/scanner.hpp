#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nczeta::detail {

// Character cursor shared by the text parsers. Positions reported in errors
// are relative to (line, column) of the first character of `text`.
class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {}

  void skip_spaces();
  bool at_end();
  char peek();
  bool accept(char c);
  void expect(char c);
  bool at_identifier();
  bool at_digit();
  std::string identifier();
  // Unsigned decimal integer.
  mpz_class integer();
  long small_integer(long max_value);

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  [[noreturn]] void fail(const std::string& what) const;
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nczeta::detail
