#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tkit {

// Every error the library throws derives from Error and carries a stable
// category tag so the CLI can map failures to exit codes and JSON fields.
struct Error : std::runtime_error {
  explicit Error(std::string category, const std::string& message)
      : std::runtime_error(message), category(std::move(category)) {}
  std::string category;
};

struct ParseError : Error {
  ParseError(size_t line, size_t column, const std::string& message)
      : Error("parse", "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

struct TypeError : Error {
  explicit TypeError(const std::string& message) : Error("type", message) {}
};

struct UnboundVariableError : Error {
  explicit UnboundVariableError(const std::string& message)
      : Error("unbound", message) {}
};

struct BudgetError : Error {
  BudgetError(uint64_t steps, uint64_t nodes, const std::string& message)
      : Error("budget", message), steps(steps), nodes(nodes) {}
  uint64_t steps;
  uint64_t nodes;
};

struct GuardError : Error {
  explicit GuardError(const std::string& message) : Error("guard", message) {}
};

struct InvariantError : Error {
  explicit InvariantError(const std::string& message)
      : Error("invariant", message) {}
};

struct InputError : Error {
  explicit InputError(const std::string& message) : Error("input", message) {}
};

}  // namespace tkit
