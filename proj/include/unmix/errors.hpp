#ifndef UNMIX_ERRORS_HPP
#define UNMIX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unmix {

/// Raised when a computation crosses one of the configured ceilings
/// (Groebner pair queue, coefficient bit size, CharserA worklist pops).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in polynomial / system text. `line` and
/// `column` are 1-based; line is 0 when parsing a single expression.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + what;
    return out;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace unmix

#endif  // UNMIX_ERRORS_HPP
