#pragma once

#include <stdexcept>
#include <string>

namespace cricket {

/// Error codes for every contract violation the library reports.
enum class ErrorCode {
  // commentary
  MalformedOverToken,
  MalformedRunsToken,
  EmptyInnings,
  ZeroBallsFaced,
  LengthMismatch,
  EmptySeries,
  NonPositiveActual,
  InvalidLexicon,
  // features
  InvalidRank,
  PercentOutOfRange,
  InconsistentRow,
  BoundaryOverflow,
  ControlOutOfRange,
  InvariantViolation,
  // preprocess
  AllRowsDropped,
  MissingColumn,
  UnknownCategory,
  EmptyMatrix,
  TooFewRows,
  // regressors
  NonFiniteInput,
  ShapeMismatch,
  ExpansionTooLarge,
  // evaluation
  ConstantActual,
  EmptyResults,
  // pipeline
  MissingInput,
  NoCommentaryFiles,
  JoinKeyMissing,
  MalformedRecord,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

/// Single exception type; tests and callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }

  /// The message without the code prefix; used when rewrapping with
  /// extra context.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace cricket
