#pragma once

#include <stdexcept>
#include <string>

namespace battopf {

// Malformed input text. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line = -1)
      : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Structurally well-formed input that violates a model invariant.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace battopf
