#pragma once

// Converts oracle instances into library inputs.

#include "oracle.hpp"
#include "prereq/course.hpp"
#include "prereq/grades.hpp"

namespace oracle {

inline prereq::Course to_course(const Instance& inst) {
  prereq::Course course;
  course.id = "random";
  course.title = "random instance";
  for (std::size_t i = 0; i < inst.concepts; ++i) course.concepts.push_back({concept_id(i), "Concept " + std::to_string(i)});
  for (const auto& [s, t] : inst.links) course.initial_links.push_back({concept_id(s), concept_id(t)});
  return course;
}

inline prereq::GradeMatrix to_matrix(const Instance& inst) {
  std::vector<std::string> learners;
  for (std::size_t l = 0; l < inst.grades.size(); ++l) learners.push_back("L" + std::to_string(l));
  prereq::GradeMatrix m("random", learners, inst.concepts);
  for (std::size_t l = 0; l < inst.grades.size(); ++l) {
    for (std::size_t c = 0; c < inst.concepts; ++c) {
      if (inst.grades[l][c]) m.set(l, c, static_cast<double>(*inst.grades[l][c]));
    }
  }
  return m;
}

}  // namespace oracle
