#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prereq/error.hpp"
#include "prereq/graph.hpp"

namespace prereq {

inline constexpr double kDefaultGradeScaleMax = 20.0;

struct Concept {
  std::string id;
  std::string name;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// A course: its concepts and the expert's initial prerequisite links.
/// Instances returned by parse_course satisfy every structural invariant
/// (unique ids, known endpoints, acyclic initial links).
struct Course {
  std::string id;
  std::string title;
  double grade_scale_max = kDefaultGradeScaleMax;
  std::vector<Concept> concepts;
  std::vector<PrerequisiteLink> initial_links;

  std::optional<std::size_t> index_of(std::string_view concept_id) const;
  const Concept& concept_by_id(std::string_view concept_id) const;
  ConceptGraph initial_graph() const;

  friend bool operator==(const Course&, const Course&) = default;
};

/// One validation finding.
struct Issue {
  ErrorCode code;
  std::string message;
};

template <typename T>
struct Checked {
  std::optional<T> value;  // set iff issues is empty
  std::vector<Issue> issues;

  bool ok() const noexcept { return issues.empty(); }
  /// Returns the value or throws the first issue as prereq::Error.
  T take() &&;
};

/// True for ids matching [A-Za-z0-9_-]+.
bool is_valid_identifier(std::string_view id) noexcept;

/// Runs every course-document check and reports all findings.
Checked<Course> check_course(std::string_view document);

/// Parses and validates a course document; throws the first finding.
Course parse_course(std::string_view document);

/// Canonical serialization: fixed key order, two-space indent, trailing
/// newline. parse_course(write_course_json(c)) == c.
std::string write_course_json(const Course& course);

template <typename T>
T Checked<T>::take() && {
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message);
  return std::move(*value);
}

}  // namespace prereq
