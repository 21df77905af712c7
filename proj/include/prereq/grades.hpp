#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prereq/course.hpp"

namespace prereq {

using Grade = std::optional<double>;

/// Learners x concepts table of grades, columns in course concept order.
/// Absent grades are std::nullopt, never zero.
class GradeMatrix {
 public:
  GradeMatrix() = default;
  GradeMatrix(std::string course_id, std::vector<std::string> learner_ids, std::size_t concept_count);

  const std::string& course_id() const noexcept { return course_id_; }
  const std::vector<std::string>& learner_ids() const noexcept { return learner_ids_; }
  std::size_t learner_count() const noexcept { return learner_ids_.size(); }
  std::size_t concept_count() const noexcept { return concept_count_; }

  const Grade& at(std::size_t learner, std::size_t concept_index) const;
  void set(std::size_t learner, std::size_t concept_index, Grade grade);

  std::size_t absent_count() const noexcept;

  friend bool operator==(const GradeMatrix&, const GradeMatrix&) = default;

 private:
  std::string course_id_;
  std::vector<std::string> learner_ids_;
  std::size_t concept_count_ = 0;
  std::vector<Grade> cells_;
};

/// Reads a grade CSV against a validated course.
///
/// Dialect: comma separated, UTF-8 (a leading BOM is skipped), LF or CRLF
/// line endings, blank lines ignored. The first header field is `learner`;
/// the remaining header fields name every course concept exactly once, in
/// any order. Cells are decimal numbers with a '.' point; surrounding
/// spaces are ignored; an empty cell is an absent grade. At least one
/// learner row is required.
Checked<GradeMatrix> check_grades_csv(std::string_view text, const Course& course);

/// As check_grades_csv, throwing the first finding.
GradeMatrix parse_grades_csv(std::string_view text, const Course& course);

/// Header `learner,<concept ids in course order>`, one LF-terminated row per
/// learner, grades in shortest round-trip decimal form, absent cells empty.
std::string write_grades_csv(const GradeMatrix& matrix, const Course& course);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace prereq
