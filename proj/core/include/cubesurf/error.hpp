#pragma once

#include <stdexcept>
#include <string>

namespace cubesurf {

enum class ErrorCode {
  WrongLength,
  BadSymbol,
  InvalidK,
  MixedDimension,
  MixedAmbient,
  NotAVertex,
  NotAClosedSurface,
  ExhaustiveTooLarge,
  BudgetExceeded,
  BehindCamera,
  DegenerateFace,
  DegenerateEdge,
  ZeroClearanceTotal,
  InvalidInitialState,
  BadFormat,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cubesurf
