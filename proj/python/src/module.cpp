#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prereq/grades.hpp"
#include "prereq/miner.hpp"
#include "prereq/model_io.hpp"

namespace py = pybind11;
using namespace prereq;

namespace {

ConceptGraph make_graph(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges) {
  ConceptGraph g{std::move(nodes), {}};
  for (const auto& [s, t] : edges) g.edges.push_back({s, t});
  return g;
}

std::vector<std::pair<std::string, std::string>> link_pairs(const std::vector<PrerequisiteLink>& links) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(links.size());
  for (const auto& l : links) out.emplace_back(l.source, l.target);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fuzzy prerequisite refinement core";

  static py::exception<Error> prereq_error(m, "PrereqError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = prereq_error;
      py::object instance = err(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(prereq_error.ptr(), instance.ptr());
    }
  });

  py::class_<FuzzyThresholds>(m, "Thresholds")
      .def(py::init(&FuzzyThresholds::validate), py::arg("s1"), py::arg("s2"), py::arg("s3"))
      .def_static("reference", &FuzzyThresholds::reference)
      .def_property_readonly("s1", &FuzzyThresholds::s1)
      .def_property_readonly("s2", &FuzzyThresholds::s2)
      .def_property_readonly("s3", &FuzzyThresholds::s3)
      .def("__eq__", [](const FuzzyThresholds& a, const FuzzyThresholds& b) { return a == b; })
      .def("__repr__", [](const FuzzyThresholds& t) {
        return "Thresholds(" + format_number(t.s1()) + ", " + format_number(t.s2()) + ", " + format_number(t.s3()) + ")";
      });

  m.def("mu_cpr", &mu_cpr, py::arg("delta"), py::arg("thresholds"));
  m.def("mu_rpr", &mu_rpr, py::arg("delta"), py::arg("thresholds"));

  py::class_<Course>(m, "Course")
      .def_readonly("id", &Course::id)
      .def_readonly("title", &Course::title)
      .def_readonly("grade_scale_max", &Course::grade_scale_max)
      .def_property_readonly("concepts",
                             [](const Course& c) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& k : c.concepts) out.emplace_back(k.id, k.name);
                               return out;
                             })
      .def_property_readonly("links", [](const Course& c) { return link_pairs(c.initial_links); })
      .def("to_json", &write_course_json);

  py::class_<GradeMatrix>(m, "GradeMatrix")
      .def_property_readonly("course_id", &GradeMatrix::course_id)
      .def_property_readonly("learners", &GradeMatrix::learner_ids)
      .def_property_readonly("concept_count", &GradeMatrix::concept_count)
      .def_property_readonly("absent_count", &GradeMatrix::absent_count)
      .def("grade", &GradeMatrix::at, py::arg("learner"), py::arg("concept_index"))
      .def("to_csv", &write_grades_csv, py::arg("course"));

  m.def("parse_course", [](const std::string& text) { return parse_course(text); }, py::arg("text"));
  m.def("parse_grades_csv", [](const std::string& text, const Course& c) { return parse_grades_csv(text, c); },
        py::arg("text"), py::arg("course"));

  py::class_<FinalDomainModel>(m, "Model")
      .def_readonly("course_id", &FinalDomainModel::course_id)
      .def_property_readonly("alpha", [](const FinalDomainModel& fm) { return fm.cut.alpha(); })
      .def_readonly("thresholds", &FinalDomainModel::thresholds)
      .def_property_readonly("final_links", [](const FinalDomainModel& fm) { return link_pairs(fm.final_links); })
      .def_readonly("diagnostics", &FinalDomainModel::diagnostics)
      .def_property_readonly("links",
                             [](const FinalDomainModel& fm) {
                               py::list out;
                               for (const auto& v : fm.verdicts) {
                                 py::dict d;
                                 d["source"] = v.link.source;
                                 d["target"] = v.link.target;
                                 d["cpr"] = v.strength.cpr;
                                 d["rpr"] = v.strength.rpr;
                                 d["support"] = v.strength.support_count;
                                 d["verdict"] = std::string(to_string(v.verdict));
                                 out.append(d);
                               }
                               return out;
                             })
      .def("count", [](const FinalDomainModel& fm, const std::string& verdict) {
        return fm.count(parse_verdict(verdict));
      })
      .def("to_json", &export_model_json)
      .def(
          "to_dot",
          [](const FinalDomainModel& fm, const Course& c, bool show_dropped) {
            return export_dot(fm, c, {.show_dropped = show_dropped});
          },
          py::arg("course"), py::arg("show_dropped") = false);

  m.def("parse_model_json", [](const std::string& text) { return parse_model_json(text); }, py::arg("text"));

  m.def(
      "refine",
      [](const Course& c, const GradeMatrix& g, const FuzzyThresholds& t, double alpha) {
        return refine_model(c, g, t, AlphaCut::validate(alpha));
      },
      py::arg("course"), py::arg("grades"), py::arg("thresholds") = FuzzyThresholds::reference(),
      py::arg("alpha") = 0.5);

  m.def(
      "sweep",
      [](const Course& c, const GradeMatrix& g, const FuzzyThresholds& t, const std::vector<double>& alphas) {
        std::vector<AlphaCut> cuts;
        for (double a : alphas) cuts.push_back(AlphaCut::validate(a));
        return sweep_alpha(c, g, t, cuts);
      },
      py::arg("course"), py::arg("grades"), py::arg("thresholds"), py::arg("alphas"));

  m.def(
      "find_cycle",
      [](std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges) {
        return find_cycle(make_graph(std::move(nodes), edges));
      },
      py::arg("nodes"), py::arg("edges"));
  m.def(
      "topological_levels",
      [](std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges) {
        return topological_levels(make_graph(std::move(nodes), edges));
      },
      py::arg("nodes"), py::arg("edges"));
}
