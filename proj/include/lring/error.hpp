#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lring {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  ZeroPolynomial,
  VariableClash,
  VariableLimit,
  DegreeOverflow,
  ParseError,
  BudgetExceeded,
  ZeroColon,
  UnitIdeal,
  NoStabilization,
  NotArtinianLocally,
  NotFound,
  InternalInconsistency,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; `kind()` is the
// machine-readable part, `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lring
