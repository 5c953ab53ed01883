#pragma once

#include <stdexcept>
#include <string>

namespace nlc {

/// Precondition or argument violation (bad degree, mismatched primes, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that does not follow the polynomial / fixture grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::string message_;
  int line_;
  int column_;
};

/// A polynomial that was required to lie in an ideal does not.
class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is mathematically valid but degenerate for the requested
/// computation: a singular surface after all retries, an improper
/// intersection, an annihilator hyperplane that the ideal data cannot pin.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndeterminateClass : public DegenerateInput {
 public:
  IndeterminateClass(const std::string& message, int corank)
      : DegenerateInput(message), corank_(corank) {}
  int corank() const { return corank_; }

 private:
  int corank_;
};

}  // namespace nlc
