#include "terrace/errors.hpp"

namespace terrace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotHalfRare: return "NotHalfRare";
    case ErrorCode::MarginalMismatch: return "MarginalMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

}  // namespace terrace
