#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitvar {

enum class ErrorCode {
  ParseError,
  NotNilpotent,
  RankDeficient,
  AllZero,
  NotComplete,
  NotFaithful,
  ArityMismatch,
  DimensionMismatch,
  PreconditionFailed,
  NotClosedUnderJordan,
  BadSlice,
  DivisionFailure,
  UnitIdeal,
  ScaleExceeded,
  NotGroupFixed,
  UnknownBuiltin,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. The code identifies the contract
/// that was violated; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitvar
