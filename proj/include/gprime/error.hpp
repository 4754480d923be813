#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gprime {

enum class ErrorKind {
  MalformedInput,
  ParseError,
  SchemaError,
  AxiomViolation,
  NotDirectSum,
  UnknownObject,
  UnknownLabel,
  RingMismatch,
  NotSUnital,
  NotInvariant,
  NotGraded,
  ObjectNotInG0Prime,
  Degenerate,
  BoundExceeded,
  AssociativityFailure,
  InternalDisagreement,
};

std::string_view to_string(ErrorKind kind);

/// Error carrying a kind tag and, for validators, every violation found.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::string> details = {})
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

/// Process exit code for an error kind: 1 invalid input, 2 bound exceeded, 3 disagreement.
int exit_code_for(ErrorKind kind);

}  // namespace gprime
