#include "prereq/grades.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prereq {

GradeMatrix::GradeMatrix(std::string course_id, std::vector<std::string> learner_ids,
                         std::size_t concept_count)
    : course_id_(std::move(course_id)),
      learner_ids_(std::move(learner_ids)),
      concept_count_(concept_count),
      cells_(learner_ids_.size() * concept_count) {}

const Grade& GradeMatrix::at(std::size_t learner, std::size_t concept_index) const {
  if (learner >= learner_count() || concept_index >= concept_count_) {
    throw std::out_of_range("grade matrix index out of range");
  }
  return cells_[learner * concept_count_ + concept_index];
}

void GradeMatrix::set(std::size_t learner, std::size_t concept_index, Grade grade) {
  if (learner >= learner_count() || concept_index >= concept_count_) {
    throw std::out_of_range("grade matrix index out of range");
  }
  cells_[learner * concept_count_ + concept_index] = grade;
}

std::size_t GradeMatrix::absent_count() const noexcept {
  std::size_t n = 0;
  for (const auto& cell : cells_) n += cell.has_value() ? 0 : 1;
  return n;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_decimal(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

Checked<GradeMatrix> check_grades_csv(std::string_view text, const Course& course) {
  Checked<GradeMatrix> result;
  auto report = [&](ErrorCode code, std::string message) {
    result.issues.push_back({code, std::move(message)});
  };

  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.substr(0, kBom.size()) == kBom) text.remove_prefix(kBom.size());

  std::vector<std::pair<std::size_t, std::string_view>> lines;  // (line number, content)
  {
    std::size_t number = 0;
    for (auto line : split_lines(text)) {
      ++number;
      if (!trim(line).empty()) lines.emplace_back(number, line);
    }
  }

  if (lines.empty() || trim(split_fields(lines.front().second).front()) != "learner") {
    report(ErrorCode::MissingHeader, "first line must be a header starting with 'learner'");
    return result;
  }

  // Map CSV columns to course concept indices.
  const auto header = split_fields(lines.front().second);
  std::vector<std::optional<std::size_t>> column_concept(header.size());
  std::set<std::size_t> covered;
  for (std::size_t col = 1; col < header.size(); ++col) {
    const std::string name(trim(header[col]));
    auto idx = course.index_of(name);
    if (!idx) {
      report(ErrorCode::UnknownConceptColumn, "header column '" + name + "' is not a concept of course '" +
                                                  course.id + "'");
      continue;
    }
    if (!covered.insert(*idx).second) {
      report(ErrorCode::MalformedDocument, "header column '" + name + "' appears more than once");
      continue;
    }
    column_concept[col] = idx;
  }
  for (std::size_t i = 0; i < course.concepts.size(); ++i) {
    if (!covered.count(i)) {
      report(ErrorCode::MissingConceptColumn, "header lacks a column for concept '" + course.concepts[i].id + "'");
    }
  }

  std::vector<std::string> learners;
  std::vector<std::vector<std::pair<std::size_t, double>>> row_grades;
  std::set<std::string> seen_learners;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [line_no, line] = lines[r];
    const std::string where = "line " + std::to_string(line_no);
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      report(ErrorCode::MalformedDocument, where + ": expected " + std::to_string(header.size()) +
                                               " fields, found " + std::to_string(fields.size()));
      continue;
    }
    const std::string learner(trim(fields[0]));
    if (learner.empty()) {
      report(ErrorCode::MalformedDocument, where + ": empty learner id");
      continue;
    }
    if (!seen_learners.insert(learner).second) {
      report(ErrorCode::DuplicateLearnerId, where + ": duplicate learner id '" + learner + "'");
      continue;
    }
    std::vector<std::pair<std::size_t, double>> present;
    for (std::size_t col = 1; col < fields.size(); ++col) {
      const std::string_view cell = trim(fields[col]);
      if (cell.empty()) continue;
      const std::string cell_where =
          where + " (learner " + learner + "), column " + std::string(trim(header[col]));
      auto value = parse_decimal(cell);
      if (!value) {
        report(ErrorCode::NonNumericGrade, cell_where + ": '" + std::string(cell) + "' is not a number");
        continue;
      }
      if (*value < 0.0 || *value > course.grade_scale_max) {
        report(ErrorCode::GradeOutOfRange, cell_where + ": " + std::string(cell) + " outside [0, " +
                                               format_number(course.grade_scale_max) + "]");
        continue;
      }
      if (column_concept[col]) present.emplace_back(*column_concept[col], *value);
    }
    learners.push_back(learner);
    row_grades.push_back(std::move(present));
  }
  if (lines.size() == 1) {
    report(ErrorCode::MalformedDocument, "no learner rows after the header");
  }

  if (!result.issues.empty()) return result;

  GradeMatrix matrix(course.id, std::move(learners), course.concepts.size());
  for (std::size_t r = 0; r < row_grades.size(); ++r) {
    for (const auto& [idx, value] : row_grades[r]) matrix.set(r, idx, value);
  }
  result.value = std::move(matrix);
  return result;
}

GradeMatrix parse_grades_csv(std::string_view text, const Course& course) {
  return check_grades_csv(text, course).take();
}

std::string write_grades_csv(const GradeMatrix& matrix, const Course& course) {
  std::string out = "learner";
  for (const auto& c : course.concepts) {
    out += ',';
    out += c.id;
  }
  out += '\n';
  for (std::size_t r = 0; r < matrix.learner_count(); ++r) {
    out += matrix.learner_ids()[r];
    for (std::size_t c = 0; c < matrix.concept_count(); ++c) {
      out += ',';
      if (const auto& g = matrix.at(r, c)) out += format_number(*g);
    }
    out += '\n';
  }
  return out;
}

}  // namespace prereq
