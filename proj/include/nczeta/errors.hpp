#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nczeta {

// Base of every error raised by the library. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that violates a precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size, memory or enumeration ceiling was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace nczeta
