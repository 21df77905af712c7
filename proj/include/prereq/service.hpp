#pragma once

#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "prereq/course.hpp"
#include "prereq/store.hpp"

namespace httplib {
class Server;
}

namespace prereq {

/// Transport-neutral reply of a service operation.
struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// HTTP status for an error code: 400 validation, 404 missing resource,
/// 409 state conflict, 500 internal.
int http_status(ErrorCode code) noexcept;

/// JSON problem document {code, message, detail}; detail lists every
/// finding as {code, message}.
std::string problem_document(ErrorCode code, std::string_view message, const std::vector<Issue>& detail = {});

/// Course management and refinement over a CourseStore. Every operation is
/// safe to call concurrently; writers of one course are serialized, readers
/// see the last committed document.
class ModelService {
 public:
  explicit ModelService(CourseStore& store) : store_(store) {}

  Response create_course(std::string_view body);
  Response list_courses();
  Response get_course(std::string_view id);
  Response upload_grades(std::string_view id, std::string_view csv);
  Response refine(std::string_view id, std::string_view params_json);
  Response get_model(std::string_view id, std::string_view format);

  /// Registers the REST routes on an httplib server.
  void mount(httplib::Server& server);

 private:
  Course load_course(std::string_view id) const;

  CourseStore& store_;
  std::mutex create_lock_;
};

}  // namespace prereq
