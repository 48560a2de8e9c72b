#pragma once

#include <stdexcept>
#include <string>

namespace surfres {

enum class ErrorCode {
  NonDivisible,
  NotWeierstrass,
  NotWt,
  ZeroInput,
  ParseError,
  EmptyPolygon,
  InvalidArgument,
  NotWithinBound,
  NotPlaneCone,
  PlaneCone,
  NotGwt,
  NotQuadrant,
  NotGwtQuadrant,
  NotPrepared,
  ForbiddenDirection,
  NotPermissible,
  MissingDirection,
  StepLimitExceeded,
};

const char* error_name(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonDivisible: return "NON_DIVISIBLE";
    case ErrorCode::NotWeierstrass: return "NOT_WEIERSTRASS";
    case ErrorCode::NotWt: return "NOT_WT";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::EmptyPolygon: return "EMPTY_POLYGON";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotWithinBound: return "NOT_WITHIN_BOUND";
    case ErrorCode::NotPlaneCone: return "NOT_PLANE_CONE";
    case ErrorCode::PlaneCone: return "PLANE_CONE";
    case ErrorCode::NotGwt: return "NOT_GWT";
    case ErrorCode::NotQuadrant: return "NOT_QUADRANT";
    case ErrorCode::NotGwtQuadrant: return "NOT_GWT_QUADRANT";
    case ErrorCode::NotPrepared: return "NOT_PREPARED";
    case ErrorCode::ForbiddenDirection: return "FORBIDDEN_DIRECTION";
    case ErrorCode::NotPermissible: return "NOT_PERMISSIBLE";
    case ErrorCode::MissingDirection: return "MISSING_DIRECTION";
    case ErrorCode::StepLimitExceeded: return "STEP_LIMIT_EXCEEDED";
  }
  return "UNKNOWN";
}

}  // namespace surfres
