#include "cricket/error.hpp"

namespace cricket {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedOverToken: return "MalformedOverToken";
    case ErrorCode::MalformedRunsToken: return "MalformedRunsToken";
    case ErrorCode::EmptyInnings: return "EmptyInnings";
    case ErrorCode::ZeroBallsFaced: return "ZeroBallsFaced";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::NonPositiveActual: return "NonPositiveActual";
    case ErrorCode::InvalidLexicon: return "InvalidLexicon";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::PercentOutOfRange: return "PercentOutOfRange";
    case ErrorCode::InconsistentRow: return "InconsistentRow";
    case ErrorCode::BoundaryOverflow: return "BoundaryOverflow";
    case ErrorCode::ControlOutOfRange: return "ControlOutOfRange";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::AllRowsDropped: return "AllRowsDropped";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorCode::ConstantActual: return "ConstantActual";
    case ErrorCode::EmptyResults: return "EmptyResults";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::NoCommentaryFiles: return "NoCommentaryFiles";
    case ErrorCode::JoinKeyMissing: return "JoinKeyMissing";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace cricket
