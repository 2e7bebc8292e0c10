#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vkbr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram, ribbon-graph or polynomial text. `line()` is 1-based,
/// 0 when the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input exceeds the exhaustive-enumeration cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Operands carry different variable lists, or a substitution is incomplete.
class VariableError : public Error {
 public:
  using Error::Error;
};

class NotAlternatingError : public Error {
 public:
  using Error::Error;
};

class NotColorableError : public Error {
 public:
  using Error::Error;
};

}  // namespace vkbr
