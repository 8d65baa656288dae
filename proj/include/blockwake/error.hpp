#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockwake {

// Base of every error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI error line.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Point outside the grid, bad parameter index.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// Landscape produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "evaluation"; }
};

// Bad bounds, weights, landscape or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structure name parsed but describes an impossible structure.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

// Plan cannot be built or executed for the given parameter count.
class PlanError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "plan"; }
};

// An indicator formula has no finite value for this structure.
class DegenerateError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate"; }
};

// Enumeration or cache would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

}  // namespace blockwake
