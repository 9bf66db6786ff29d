#include "hyperharm/errors.hpp"

namespace hyperharm {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::IdentityMap: return "IdentityMap";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::BoundsMissing: return "BoundsMissing";
    case ErrorCode::NotTangential: return "NotTangential";
    case ErrorCode::CommutingInputs: return "CommutingInputs";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::TruncationTooLarge: return "TruncationTooLarge";
    case ErrorCode::InvarianceDefectTooLarge: return "InvarianceDefectTooLarge";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace hyperharm
