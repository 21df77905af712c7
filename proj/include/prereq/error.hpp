#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prereq {

/// Every failure the library can report. The enumerator name is the wire
/// identifier used in CLI diagnostics and HTTP problem documents.
enum class ErrorCode {
  // thresholds and alpha-cut
  NonNegativeS1,
  NonPositiveS2,
  S3NotAboveS2,
  NonFinite,
  ThresholdOutOfScale,
  AlphaOutOfRange,
  EmptyAlphaList,
  AlphasNotAscending,
  // course documents
  MalformedDocument,
  DuplicateConceptId,
  DuplicateLink,
  UnknownLinkEndpoint,
  SelfLoop,
  InitialModelCyclic,
  BidirectionalPair,
  // grade CSV
  MissingHeader,
  UnknownConceptColumn,
  MissingConceptColumn,
  NonNumericGrade,
  GradeOutOfRange,
  DuplicateLearnerId,
  // graph and pipeline
  GraphCyclic,
  CourseMatrixMismatch,
  // service
  Conflict,
  NotFound,
  NoGradesUploaded,
  NoModelYet,
  UnsupportedFormat,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for errors caused by caller input (as opposed to missing resources
/// or internal faults).
bool is_validation_error(ErrorCode code) noexcept;

}  // namespace prereq
