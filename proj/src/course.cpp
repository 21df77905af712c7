#include "prereq/course.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <nlohmann/json.hpp>

namespace prereq {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<std::size_t> Course::index_of(std::string_view concept_id) const {
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (concepts[i].id == concept_id) return i;
  }
  return std::nullopt;
}

const Concept& Course::concept_by_id(std::string_view concept_id) const {
  if (auto i = index_of(concept_id)) return concepts[*i];
  throw Error(ErrorCode::UnknownLinkEndpoint, "unknown concept '" + std::string(concept_id) + "'");
}

ConceptGraph Course::initial_graph() const {
  ConceptGraph g;
  for (const auto& c : concepts) g.nodes.push_back(c.id);
  g.edges = initial_links;
  return g;
}

bool is_valid_identifier(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
           ch == '_' || ch == '-';
  });
}

namespace {

class CourseChecker {
 public:
  Checked<Course> run(std::string_view document) {
    json root;
    try {
      root = json::parse(document);
    } catch (const json::parse_error& e) {
      report(ErrorCode::MalformedDocument, std::string("invalid JSON: ") + e.what());
      return finish();
    }
    if (!root.is_object()) {
      report(ErrorCode::MalformedDocument, "course document must be a JSON object");
      return finish();
    }
    read_header(root);
    read_concepts(root);
    read_links(root);
    check_acyclic();
    return finish();
  }

 private:
  void report(ErrorCode code, std::string message) {
    result_.issues.push_back({code, std::move(message)});
  }

  Checked<Course> finish() {
    if (result_.issues.empty()) result_.value = std::move(course_);
    return std::move(result_);
  }

  void read_header(const json& root) {
    auto id = root.find("id");
    if (id == root.end() || !id->is_string()) {
      report(ErrorCode::MalformedDocument, "course 'id' must be a string");
    } else {
      course_.id = id->get<std::string>();
      if (!is_valid_identifier(course_.id)) {
        report(ErrorCode::MalformedDocument,
               "course id '" + course_.id + "' must match [A-Za-z0-9_-]+");
      }
    }
    if (auto title = root.find("title"); title != root.end()) {
      if (title->is_string()) {
        course_.title = title->get<std::string>();
      } else {
        report(ErrorCode::MalformedDocument, "course 'title' must be a string");
      }
    }
    if (auto scale = root.find("grade_scale_max"); scale != root.end()) {
      if (!scale->is_number() || !std::isfinite(scale->get<double>()) || scale->get<double>() <= 0) {
        report(ErrorCode::MalformedDocument, "'grade_scale_max' must be a positive number");
      } else {
        course_.grade_scale_max = scale->get<double>();
      }
    }
  }

  void read_concepts(const json& root) {
    auto concepts = root.find("concepts");
    if (concepts == root.end() || !concepts->is_array()) {
      report(ErrorCode::MalformedDocument, "'concepts' must be an array");
      return;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < concepts->size(); ++i) {
      const json& entry = (*concepts)[i];
      const std::string where = "concepts[" + std::to_string(i) + "]";
      if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
        report(ErrorCode::MalformedDocument, where + " must be an object with a string 'id'");
        continue;
      }
      Concept c;
      c.id = entry["id"].get<std::string>();
      if (!is_valid_identifier(c.id)) {
        report(ErrorCode::MalformedDocument, where + ": id '" + c.id + "' must match [A-Za-z0-9_-]+");
        continue;
      }
      if (auto name = entry.find("name"); name != entry.end()) {
        if (!name->is_string()) {
          report(ErrorCode::MalformedDocument, where + ": 'name' must be a string");
          continue;
        }
        c.name = name->get<std::string>();
      } else {
        c.name = c.id;
      }
      if (!seen.insert(c.id).second) {
        report(ErrorCode::DuplicateConceptId, "duplicate concept id '" + c.id + "'");
        continue;
      }
      course_.concepts.push_back(std::move(c));
    }
    if (seen.size() < 2) {
      report(ErrorCode::MalformedDocument, "a course needs at least 2 concepts");
    }
  }

  void read_links(const json& root) {
    auto links = root.find("links");
    if (links == root.end()) return;
    if (!links->is_array()) {
      report(ErrorCode::MalformedDocument, "'links' must be an array");
      return;
    }
    std::set<PrerequisiteLink> seen;
    for (std::size_t i = 0; i < links->size(); ++i) {
      const json& entry = (*links)[i];
      const std::string where = "links[" + std::to_string(i) + "]";
      if (!entry.is_object() || !entry.contains("source") || !entry.contains("target") ||
          !entry["source"].is_string() || !entry["target"].is_string()) {
        report(ErrorCode::MalformedDocument, where + " must be an object with string 'source' and 'target'");
        continue;
      }
      PrerequisiteLink link{entry["source"].get<std::string>(), entry["target"].get<std::string>()};
      const std::string name = where + " (" + to_string(link) + ")";
      bool known = true;
      for (const auto* end : {&link.source, &link.target}) {
        if (!course_.index_of(*end)) {
          report(ErrorCode::UnknownLinkEndpoint, name + ": unknown concept '" + *end + "'");
          known = false;
        }
      }
      if (!known) continue;
      if (link.source == link.target) {
        report(ErrorCode::SelfLoop, name + ": a concept cannot be its own prerequisite");
        continue;
      }
      if (seen.count(link)) {
        report(ErrorCode::DuplicateLink, name + ": duplicate link");
        continue;
      }
      if (seen.count(link.flipped())) {
        report(ErrorCode::BidirectionalPair, name + ": the opposite link " +
                                                 to_string(link.flipped()) + " is also present");
        continue;
      }
      seen.insert(link);
      course_.initial_links.push_back(std::move(link));
    }
  }

  void check_acyclic() {
    if (auto cycle = find_cycle(course_.initial_graph())) {
      report(ErrorCode::InitialModelCyclic, "initial links contain a cycle: " + format_cycle(*cycle));
    }
  }

  Course course_;
  Checked<Course> result_;
};

}  // namespace

Checked<Course> check_course(std::string_view document) { return CourseChecker{}.run(document); }

Course parse_course(std::string_view document) { return check_course(document).take(); }

std::string write_course_json(const Course& course) {
  ordered_json doc;
  doc["id"] = course.id;
  doc["title"] = course.title;
  doc["grade_scale_max"] = course.grade_scale_max;
  doc["concepts"] = ordered_json::array();
  for (const auto& c : course.concepts) {
    doc["concepts"].push_back(ordered_json{{"id", c.id}, {"name", c.name}});
  }
  doc["links"] = ordered_json::array();
  for (const auto& l : course.initial_links) {
    doc["links"].push_back(ordered_json{{"source", l.source}, {"target", l.target}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace prereq
