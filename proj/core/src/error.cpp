#include "cubesurf/error.hpp"

namespace cubesurf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::MixedDimension: return "MixedDimension";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::NotAClosedSurface: return "NotAClosedSurface";
    case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BehindCamera: return "BehindCamera";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::ZeroClearanceTotal: return "ZeroClearanceTotal";
    case ErrorCode::InvalidInitialState: return "InvalidInitialState";
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cubesurf
