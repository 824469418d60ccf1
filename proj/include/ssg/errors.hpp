#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

// Thrown by operations whose precondition is a source-free graph (the
// infinite-path space below a source vertex is empty, so the property in
// question is vacuous there and we refuse to answer instead of guessing).
struct SourcePresentError : std::runtime_error {
  explicit SourcePresentError(const std::string& what)
      : std::runtime_error(what) {}
};

// Guardrail for circuit enumeration; counts can be exponential.
struct ResourceExceededError : std::runtime_error {
  explicit ResourceExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// Word-problem search called with a bound smaller than the query itself.
struct BoundTooSmallError : std::invalid_argument {
  explicit BoundTooSmallError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed input document (syntax, schema, duplicate keys).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ssg
