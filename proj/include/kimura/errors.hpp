#pragma once

#include <stdexcept>
#include <string>

namespace kimura {

/// Raised when a computation would exceed a configured size guard
/// (partition bound, group-algebra degree, tensor-power dimension cap).
class size_error : public std::length_error {
public:
  explicit size_error(const std::string& what) : std::length_error(what) {}
};

/// Raised when an input violates a hypothesis of the operation it was handed to.
class hypothesis_error : public std::invalid_argument {
public:
  explicit hypothesis_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input text; line() is 1-based, 0 when the error is not tied to a line.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line) : std::runtime_error(format(what, line)), line_(line) {}
  int line() const noexcept { return line_; }

private:
  static std::string format(const std::string& what, int line) {
    return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
  }
  int line_;
};

}  // namespace kimura
