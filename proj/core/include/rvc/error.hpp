#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rvc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or coloring input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called on input violating its stated precondition
/// (disconnected graph, graph not 2-connected, ear too short, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search ran out of its node budget. Distinct from a negative
/// answer: nothing may be concluded from it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes) : Error(what), nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// A construction produced a coloring that failed verification.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvc
