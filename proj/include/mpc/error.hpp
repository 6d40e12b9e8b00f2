#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpc {

class MpcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public MpcError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : MpcError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The term is not closed or not guarded, or a name is undefined.
class SemanticError : public MpcError {
 public:
  using MpcError::MpcError;
};

class StateBoundError : public MpcError {
 public:
  explicit StateBoundError(std::size_t bound)
      : MpcError("state space exceeds the bound of " + std::to_string(bound) + " states"),
        bound_(bound) {}

  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// A weak relation was requested on a system with a cycle of tau-transitions.
class DivergenceError : public MpcError {
 public:
  using MpcError::MpcError;
};

/// The g-family search exceeded its configured budget.
class BudgetError : public MpcError {
 public:
  using MpcError::MpcError;
};

/// The CTMC is not irreducible, so no unique steady state is reported.
class ReducibleChainError : public MpcError {
 public:
  using MpcError::MpcError;
};

class NotRelatedError : public MpcError {
 public:
  using MpcError::MpcError;
};

}  // namespace mpc
