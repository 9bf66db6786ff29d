#pragma once

#include <stdexcept>
#include <string>

namespace hyperharm {

enum class ErrorCode {
  PoleAtPoint = 1,
  IdentityMap,
  ConstraintViolation,
  TooCloseToBoundary,
  QuadratureFailure,
  DomainViolation,
  BoundsMissing,
  NotTangential,
  CommutingInputs,
  ConstructionFailed,
  TruncationTooLarge,
  InvarianceDefectTooLarge,
  CoverageGap,
  InvalidArgument,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperharm
