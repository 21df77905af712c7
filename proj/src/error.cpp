#include "prereq/error.hpp"

namespace prereq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonNegativeS1: return "NonNegativeS1";
    case ErrorCode::NonPositiveS2: return "NonPositiveS2";
    case ErrorCode::S3NotAboveS2: return "S3NotAboveS2";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ThresholdOutOfScale: return "ThresholdOutOfScale";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::EmptyAlphaList: return "EmptyAlphaList";
    case ErrorCode::AlphasNotAscending: return "AlphasNotAscending";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::DuplicateConceptId: return "DuplicateConceptId";
    case ErrorCode::DuplicateLink: return "DuplicateLink";
    case ErrorCode::UnknownLinkEndpoint: return "UnknownLinkEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InitialModelCyclic: return "InitialModelCyclic";
    case ErrorCode::BidirectionalPair: return "BidirectionalPair";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::UnknownConceptColumn: return "UnknownConceptColumn";
    case ErrorCode::MissingConceptColumn: return "MissingConceptColumn";
    case ErrorCode::NonNumericGrade: return "NonNumericGrade";
    case ErrorCode::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorCode::DuplicateLearnerId: return "DuplicateLearnerId";
    case ErrorCode::GraphCyclic: return "GraphCyclic";
    case ErrorCode::CourseMatrixMismatch: return "CourseMatrixMismatch";
    case ErrorCode::Conflict: return "Conflict";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NoGradesUploaded: return "NoGradesUploaded";
    case ErrorCode::NoModelYet: return "NoModelYet";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Conflict:
    case ErrorCode::NotFound:
    case ErrorCode::NoGradesUploaded:
    case ErrorCode::NoModelYet:
    case ErrorCode::Internal:
      return false;
    default:
      return true;
  }
}

}  // namespace prereq
