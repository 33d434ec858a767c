#include "scanner.hpp"

#include <cctype>

#include "nczeta/errors.hpp"

namespace nczeta::detail {

void Scanner::skip_spaces() {
  while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
}

bool Scanner::at_end() {
  skip_spaces();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_spaces();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void Scanner::expect(char c) {
  if (!accept(c)) {
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
  }
}

bool Scanner::at_identifier() {
  const char c = peek();
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool Scanner::at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

std::string Scanner::identifier() {
  if (!at_identifier()) fail("expected a name");
  const std::size_t start = pos_;
  while (pos_ < text_.size() &&
         (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

mpz_class Scanner::integer() {
  if (!at_digit()) fail("expected an integer");
  const std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
}

long Scanner::small_integer(long max_value) {
  const std::size_t start = pos_;
  const mpz_class v = integer();
  if (v > max_value) fail_at(start, "integer too large");
  return v.get_si();
}

void Scanner::fail(const std::string& what) const { fail_at(pos_, what); }

void Scanner::fail_at(std::size_t pos, const std::string& what) const {
  std::size_t line = line_;
  std::size_t column = column_;
  for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(what, line, column);
}

}  // namespace nczeta::detail
