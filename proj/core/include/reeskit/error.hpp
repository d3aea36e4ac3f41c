#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reeskit {

enum class ErrorCode {
  CycleDetected,
  NotReduced,
  IndexOutOfRange,
  DuplicateDescriptor,
  NotSemipure,
  NotPure,
  NoUniqueMinimum,
  NoUniqueMaximum,
  NotComparable,
  BoundExceeded,
  NotPrimePower,
  LengthMismatch,
  PreconditionFailed,
  ModeMismatch,
  UnknownFormula,
  UnknownIdentity,
  UnknownTarget,
  NotAPermutation,
  NotInDomain,
  SizeBound,
  ParseError,
  InexactDivision,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit status) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reeskit
