#include "hnf/errors.hpp"

namespace hnf {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::LinearPartError: return "LinearPartError";
    case ErrorCode::UndeclaredParameter: return "UndeclaredParameter";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::BadLinearPart: return "BadLinearPart";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NoParametricDimension: return "NoParametricDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonResonantTerm: return "NonResonantTerm";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace hnf
