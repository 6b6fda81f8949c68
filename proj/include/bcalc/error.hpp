#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected = {});

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Church-style checking failure. `path` addresses the offending subterm.
class TypeError : public Error {
public:
  enum class Kind { TypeMismatch, AffinityViolation, UnboundVariable, InconsistentVariable };

  TypeError(Kind kind, Path path, const std::string& message, std::optional<Type> expected = std::nullopt,
            std::optional<Type> found = std::nullopt, std::string variable = {});

  Kind kind() const noexcept { return kind_; }
  const Path& path() const noexcept { return path_; }
  const std::optional<Type>& expected() const noexcept { return expected_; }
  const std::optional<Type>& found() const noexcept { return found_; }
  const std::string& variable() const noexcept { return variable_; }

private:
  Kind kind_;
  Path path_;
  std::optional<Type> expected_;
  std::optional<Type> found_;
  std::string variable_;
};

class InferenceError : public Error {
public:
  enum class Kind { UnificationFailure, OccursCheck, AffinityViolation };

  InferenceError(Kind kind, Path path, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  const Path& path() const noexcept { return path_; }

private:
  Kind kind_;
  Path path_;
};

class ReductionError : public Error {
public:
  enum class Kind { InvalidRedex, StepBudgetExceeded, Unclassified };

  ReductionError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// A `*`-translation step-mapping check did not hold. Indicates a bug.
class MappingFailure : public Error {
public:
  using Error::Error;
};

class DerivationError : public Error {
public:
  enum class Kind { InvalidRule, PreconditionViolation, BudgetExceeded };

  DerivationError(Kind kind, Path path, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  const Path& path() const noexcept { return path_; }

private:
  Kind kind_;
  Path path_;
};

std::string format_path(const Path& path);

}  // namespace bcalc
