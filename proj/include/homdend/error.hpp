#pragma once

#include <stdexcept>
#include <string>

namespace homdend {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NonPrimeModulus,
  DimensionMismatch,
  ShapeMismatch,
  InvalidInput,
  NotRotaBaxter,
  NotOOperator,
  ArityMismatch,
  StructureMismatch,
  OutOfRange,
  DegreeCapExceeded,
  OrderMismatch,
  NonCommutingComponent,
  NotCocycle,
  DeformationInvalid,
  AssertionFailure,
  InternalInconsistency,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

/// All toolkit errors carry a kind so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace homdend
