#pragma once

#include <stdexcept>
#include <string>

namespace af {

enum class ErrorKind {
  duplicate_argument,
  unknown_argument,
  empty_name,
  invalid_name,
  missing_separator,
  malformed_argument_line,
  malformed_attack_line,
  syntax_error,
  too_large,
};

// Shared error type for framework construction, parsing and the oracle.
// line/column are 1-based where known, 0 otherwise.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(format(message, line, column)),
        kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    s += ": " + message;
    return s;
  }

  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace af
