#pragma once

#include <stdexcept>
#include <string>

#include "nlgames/rational.hpp"

namespace nlg {

/// An exhaustive enumeration would exceed the configured strategy budget.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(BigInt required, unsigned long budget)
      : std::runtime_error("enumeration budget exceeded: " + required.get_str() +
                           " deterministic strategies required, budget is " +
                           std::to_string(budget)),
        required_(std::move(required)) {}

  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

/// A document failed to parse; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A caller-asserted precondition failed (e.g. a non-winning strategy fed to
/// the classical-strategy extractor).
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The extraction walk found no outcome pair compatible on every Bob input.
class ExtractionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No deterministic strategy saturates the expression's bound.
class DegenerateExpressionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlg
