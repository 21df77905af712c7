#include "prereq/model_io.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <tuple>

namespace prereq {

using nlohmann::ordered_json;

namespace {

ConceptGraph final_graph(const FinalDomainModel& model) {
  ConceptGraph g;
  for (const auto& c : model.concepts) g.nodes.push_back(c.id);
  g.edges = model.final_links;
  return g;
}

ordered_json summary_of(const FinalDomainModel& model) {
  ordered_json s;
  for (auto v : {Verdict::Kept, Verdict::Reversed, Verdict::Dropped, Verdict::InsufficientData}) {
    s[std::string(to_string(v))] = model.count(v);
  }
  s["final_links"] = model.final_links.size();
  return s;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, "model document: " + what);
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object()) malformed("expected an object around '" + std::string(key) + "'");
  auto it = obj.find(key);
  if (it == obj.end()) malformed("missing key '" + std::string(key) + "'");
  return *it;
}

std::string string_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_string()) malformed("'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

double number_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number()) malformed("'" + std::string(key) + "' must be a number");
  return v.get<double>();
}

const ordered_json& array_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_array()) malformed("'" + std::string(key) + "' must be an array");
  return v;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_model_json(const FinalDomainModel& model) {
  ordered_json doc;
  doc["schema"] = kModelSchemaId;
  doc["course_id"] = model.course_id;
  doc["concepts"] = ordered_json::array();
  for (const auto& c : model.concepts) doc["concepts"].push_back({{"id", c.id}, {"name", c.name}});
  doc["parameters"] = {{"s1", model.thresholds.s1()},
                       {"s2", model.thresholds.s2()},
                       {"s3", model.thresholds.s3()},
                       {"alpha", model.cut.alpha()}};
  doc["summary"] = summary_of(model);
  doc["links"] = ordered_json::array();
  for (const auto& v : model.verdicts) {
    doc["links"].push_back({{"source", v.link.source},
                            {"target", v.link.target},
                            {"cpr", v.strength.cpr},
                            {"rpr", v.strength.rpr},
                            {"support", v.strength.support_count},
                            {"verdict", to_string(v.verdict)}});
  }
  doc["final_links"] = ordered_json::array();
  for (const auto& l : model.final_links) doc["final_links"].push_back({{"source", l.source}, {"target", l.target}});
  doc["levels"] = topological_levels(final_graph(model));
  doc["diagnostics"] = model.diagnostics;
  return doc.dump(2) + "\n";
}

FinalDomainModel parse_model_json(std::string_view document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const ordered_json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (string_field(doc, "schema") != kModelSchemaId) malformed("unsupported schema id");

  FinalDomainModel model;
  model.course_id = string_field(doc, "course_id");
  for (const auto& c : array_field(doc, "concepts")) {
    model.concepts.push_back({string_field(c, "id"), string_field(c, "name")});
  }
  const auto& params = field(doc, "parameters");
  model.thresholds = FuzzyThresholds::validate(number_field(params, "s1"), number_field(params, "s2"),
                                               number_field(params, "s3"));
  model.cut = AlphaCut::validate(number_field(params, "alpha"));

  for (const auto& l : array_field(doc, "links")) {
    LinkVerdict v{{string_field(l, "source"), string_field(l, "target")}, {}, Verdict::Dropped};
    v.strength.cpr = number_field(l, "cpr");
    v.strength.rpr = number_field(l, "rpr");
    const auto& support = field(l, "support");
    if (!support.is_number_unsigned()) malformed("'support' must be a non-negative integer");
    v.strength.support_count = support.get<std::size_t>();
    v.verdict = parse_verdict(string_field(l, "verdict"));
    if (v.strength.cpr < 0 || v.strength.cpr > 1 || v.strength.rpr < 0 || v.strength.rpr > 1) {
      malformed("link " + to_string(v.link) + ": strengths must lie in [0, 1]");
    }
    model.verdicts.push_back(std::move(v));
  }
  for (const auto& l : array_field(doc, "final_links")) {
    model.final_links.push_back({string_field(l, "source"), string_field(l, "target")});
  }
  if (!std::is_sorted(model.final_links.begin(), model.final_links.end())) malformed("final_links must be sorted");
  for (const auto& d : array_field(doc, "diagnostics")) {
    if (!d.is_string()) malformed("diagnostics must be strings");
    model.diagnostics.push_back(d.get<std::string>());
  }

  if (find_cycle(final_graph(model))) malformed("final_links contain a cycle");
  if (field(doc, "summary") != summary_of(model)) malformed("summary disagrees with link records");
  if (field(doc, "levels") != ordered_json(topological_levels(final_graph(model)))) {
    malformed("levels disagree with final_links");
  }
  return model;
}

std::string export_dot(const FinalDomainModel& model, const Course& course, const DotOptions& options) {
  struct DotEdge {
    PrerequisiteLink edge;
    std::string_view style;
    std::string_view color;
  };
  std::map<PrerequisiteLink, Verdict> final_origin;
  std::vector<DotEdge> edges;
  for (const auto& v : model.verdicts) {
    switch (v.verdict) {
      case Verdict::Kept:
        final_origin[v.link] = v.verdict;
        break;
      case Verdict::InsufficientData:
        final_origin[v.link] = v.verdict;
        break;
      case Verdict::Reversed:
        final_origin[v.link.flipped()] = v.verdict;
        break;
      case Verdict::Dropped:
        if (options.show_dropped) edges.push_back({v.link, "dashed", "gray"});
        break;
    }
  }
  for (const auto& e : model.final_links) {
    auto it = final_origin.find(e);
    const Verdict v = it == final_origin.end() ? Verdict::Kept : it->second;
    switch (v) {
      case Verdict::Reversed:
        edges.push_back({e, "bold", "red"});
        break;
      case Verdict::InsufficientData:
        edges.push_back({e, "dotted", "black"});
        break;
      default:
        edges.push_back({e, "solid", "black"});
        break;
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const DotEdge& a, const DotEdge& b) { return a.edge < b.edge; });

  std::string out = "digraph " + dot_quote(model.course_id) + " {\n";
  for (const auto& c : course.concepts) {
    out += "  " + dot_quote(c.id) + " [label=" + dot_quote(c.name) + "];\n";
  }
  for (const auto& e : edges) {
    out += "  " + dot_quote(e.edge.source) + " -> " + dot_quote(e.edge.target) + " [style=" +
           std::string(e.style) + ", color=" + std::string(e.color) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace prereq
