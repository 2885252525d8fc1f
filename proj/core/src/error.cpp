#include "orbitvar/error.hpp"

namespace orbitvar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotClosedUnderJordan: return "NotClosedUnderJordan";
    case ErrorCode::BadSlice: return "BadSlice";
    case ErrorCode::DivisionFailure: return "DivisionFailure";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::NotGroupFixed: return "NotGroupFixed";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace orbitvar
