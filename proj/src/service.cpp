#include "prereq/service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "prereq/grades.hpp"
#include "prereq/miner.hpp"
#include "prereq/model_io.hpp"

namespace prereq {

using nlohmann::ordered_json;

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotFound:
    case ErrorCode::NoModelYet:
      return 404;
    case ErrorCode::Conflict:
    case ErrorCode::NoGradesUploaded:
      return 409;
    case ErrorCode::Internal:
      return 500;
    default:
      return 400;
  }
}

std::string problem_document(ErrorCode code, std::string_view message, const std::vector<Issue>& detail) {
  ordered_json doc;
  doc["code"] = to_string(code);
  doc["message"] = message;
  doc["detail"] = ordered_json::array();
  for (const auto& issue : detail) {
    doc["detail"].push_back({{"code", to_string(issue.code)}, {"message", issue.message}});
  }
  return doc.dump(2) + "\n";
}

namespace {

Response problem(ErrorCode code, std::string_view message, const std::vector<Issue>& detail = {}) {
  return {http_status(code), "application/problem+json", problem_document(code, message, detail)};
}

Response problem(const Error& e) { return problem(e.code(), e.what(), {{e.code(), e.what()}}); }

Response problem(const std::vector<Issue>& issues) {
  return problem(issues.front().code, issues.front().message, issues);
}

template <typename Fn>
Response guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return problem(e);
  } catch (const std::exception& e) {
    return problem(ErrorCode::Internal, e.what());
  }
}

double required_number(const ordered_json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_number()) {
    throw Error(ErrorCode::MalformedDocument, std::string("refine parameters need a numeric '") + key + "'");
  }
  return it->get<double>();
}

}  // namespace

Course ModelService::load_course(std::string_view id) const {
  auto text = store_.has_course(id) ? store_.read(id, Artifact::Course) : std::nullopt;
  if (!text) throw Error(ErrorCode::NotFound, "no course '" + std::string(id) + "'");
  return parse_course(*text);
}

Response ModelService::create_course(std::string_view body) {
  return guarded([&]() -> Response {
    auto checked = check_course(body);
    if (!checked.ok()) return problem(checked.issues);
    const Course course = std::move(checked).take();
    const std::string canonical = write_course_json(course);
    const std::string reply = ordered_json{{"id", course.id}}.dump() + "\n";

    std::lock_guard guard(create_lock_);
    if (store_.has_course(course.id)) {
      if (store_.read(course.id, Artifact::Course) == canonical) return {200, "application/json", reply};
      return problem(ErrorCode::Conflict, "course '" + course.id + "' already exists with different content");
    }
    store_.write(course.id, Artifact::Course, canonical);
    return {201, "application/json", reply};
  });
}

Response ModelService::list_courses() {
  return guarded([&]() -> Response {
    ordered_json list = ordered_json::array();
    for (const auto& id : store_.list_ids()) {
      const Course course = load_course(id);
      list.push_back({{"id", course.id}, {"title", course.title}, {"concepts", course.concepts.size()},
                      {"has_grades", store_.read(id, Artifact::Grades).has_value()},
                      {"has_model", store_.read(id, Artifact::Model).has_value()}});
    }
    return {200, "application/json", list.dump(2) + "\n"};
  });
}

Response ModelService::get_course(std::string_view id) {
  return guarded([&]() -> Response { return {200, "application/json", write_course_json(load_course(id))}; });
}

Response ModelService::upload_grades(std::string_view id, std::string_view csv) {
  return guarded([&]() -> Response {
    const Course course = load_course(id);
    auto checked = check_grades_csv(csv, course);
    if (!checked.ok()) return problem(checked.issues);
    const GradeMatrix matrix = std::move(checked).take();

    std::lock_guard guard(store_.writer_lock(id));
    store_.write(id, Artifact::Grades, write_grades_csv(matrix, course));
    ordered_json summary{{"learners", matrix.learner_count()},
                         {"concepts", matrix.concept_count()},
                         {"absent_cells", matrix.absent_count()}};
    return {200, "application/json", summary.dump(2) + "\n"};
  });
}

Response ModelService::refine(std::string_view id, std::string_view params_json) {
  return guarded([&]() -> Response {
    const Course course = load_course(id);
    ordered_json params;
    try {
      params = ordered_json::parse(params_json);
    } catch (const ordered_json::parse_error& e) {
      throw Error(ErrorCode::MalformedDocument, std::string("refine parameters: ") + e.what());
    }
    if (!params.is_object()) throw Error(ErrorCode::MalformedDocument, "refine parameters must be a JSON object");
    const auto thresholds = FuzzyThresholds::validate(required_number(params, "s1"), required_number(params, "s2"),
                                                      required_number(params, "s3"));
    const auto cut = AlphaCut::validate(required_number(params, "alpha"));

    std::lock_guard guard(store_.writer_lock(id));
    auto csv = store_.read(id, Artifact::Grades);
    if (!csv) throw Error(ErrorCode::NoGradesUploaded, "course '" + std::string(id) + "' has no grades yet");
    const GradeMatrix matrix = parse_grades_csv(*csv, course);
    const std::string document = export_model_json(refine_model(course, matrix, thresholds, cut));
    store_.write(id, Artifact::Model, document);
    return {200, "application/json", document};
  });
}

Response ModelService::get_model(std::string_view id, std::string_view format) {
  return guarded([&]() -> Response {
    const Course course = load_course(id);
    if (format != "json" && format != "dot") {
      throw Error(ErrorCode::UnsupportedFormat, "format must be 'json' or 'dot'");
    }
    auto document = store_.read(id, Artifact::Model);
    if (!document) throw Error(ErrorCode::NoModelYet, "course '" + std::string(id) + "' has not been refined yet");
    if (format == "json") return {200, "application/json", *document};
    return {200, "text/vnd.graphviz", export_dot(parse_model_json(*document), course)};
  });
}

void ModelService::mount(httplib::Server& server) {
  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  const std::string id = "([A-Za-z0-9_-]+)";

  server.Post("/courses", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, create_course(req.body));
  });
  server.Get("/courses", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, list_courses());
  });
  server.Get("/courses/" + id, [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, get_course(req.matches[1].str()));
  });
  server.Put("/courses/" + id + "/grades", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, upload_grades(req.matches[1].str(), req.body));
  });
  server.Post("/courses/" + id + "/refine", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, refine(req.matches[1].str(), req.body));
  });
  server.Get("/courses/" + id + "/model", [this, send](const httplib::Request& req, httplib::Response& res) {
    const std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
    send(res, get_model(req.matches[1].str(), format));
  });
}

}  // namespace prereq
