#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hughes {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  Disconnected,
  EmptyBoundary,
  VertexOutOfRange,
  DomainError,
  NoConvergence,
  CflViolation,
  DiffusionCflViolation,
  BoundsViolation,
  DegenerateEdge,
  DensityOutOfRange,
  ParseError,
  ScenarioInvalid,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the
// CLI error record) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace hughes
