#include "bcalc/error.hpp"

namespace bcalc {

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span),
      expected_(std::move(expected)) {}

TypeError::TypeError(Kind kind, Path path, const std::string& message, std::optional<Type> expected,
                     std::optional<Type> found, std::string variable)
    : Error(message + " at " + format_path(path)),
      kind_(kind),
      path_(std::move(path)),
      expected_(std::move(expected)),
      found_(std::move(found)),
      variable_(std::move(variable)) {}

InferenceError::InferenceError(Kind kind, Path path, const std::string& message)
    : Error(message + " at " + format_path(path)), kind_(kind), path_(std::move(path)) {}

DerivationError::DerivationError(Kind kind, Path path, const std::string& message)
    : Error(message + " at " + format_path(path)), kind_(kind), path_(std::move(path)) {}

std::string format_path(const Path& path) {
  if (path.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

}  // namespace bcalc
