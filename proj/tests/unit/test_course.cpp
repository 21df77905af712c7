#include <doctest.h>

#include <fstream>
#include <sstream>

#include "prereq/course.hpp"

using namespace prereq;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PREREQ_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string doc_with_links(const std::string& links) {
  return R"({"id":"t","title":"T","concepts":[{"id":"A","name":"a"},{"id":"B","name":"b"},{"id":"C","name":"c"}],"links":[)" +
         links + "]}";
}

ErrorCode first_error(const std::string& document) {
  try {
    parse_course(document);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse_course to fail: " << document);
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse the bundled Java course") {
  const Course course = parse_course(read_fixture("java-101.course.json"));
  CHECK(course.id == "java-101");
  CHECK(course.grade_scale_max == 20);
  REQUIRE(course.concepts.size() == 12);
  CHECK(course.concepts.front().id == "ElemJava");
  CHECK(course.concepts.front().name == "Elementary of Java");
  CHECK(course.concepts.back().name == "Collections");
  CHECK(course.initial_links.size() == 13);
  CHECK_FALSE(find_cycle(course.initial_graph()));
}

TEST_CASE("course defaults") {
  const Course c = parse_course(R"({"id":"x","concepts":[{"id":"A"},{"id":"B"}]})");
  CHECK(c.title.empty());
  CHECK(c.grade_scale_max == kDefaultGradeScaleMax);
  CHECK(c.concepts[0].name == "A");
  CHECK(c.initial_links.empty());
}

TEST_CASE("course errors") {
  CHECK(first_error(doc_with_links(R"({"source":"A","target":"A"})")) == ErrorCode::SelfLoop);
  CHECK(first_error(doc_with_links(R"({"source":"A","target":"B"},{"source":"B","target":"C"},{"source":"C","target":"A"})")) ==
        ErrorCode::InitialModelCyclic);
  CHECK(first_error(doc_with_links(R"({"source":"A","target":"Z"})")) == ErrorCode::UnknownLinkEndpoint);
  CHECK(first_error(doc_with_links(R"({"source":"A","target":"B"},{"source":"B","target":"A"})")) ==
        ErrorCode::BidirectionalPair);
  CHECK(first_error(doc_with_links(R"({"source":"A","target":"B"},{"source":"A","target":"B"})")) ==
        ErrorCode::DuplicateLink);
  CHECK(first_error(R"({"id":"t","concepts":[{"id":"A"},{"id":"A"},{"id":"B"}]})") == ErrorCode::DuplicateConceptId);
  CHECK(first_error("{not json") == ErrorCode::MalformedDocument);
  CHECK(first_error("[]") == ErrorCode::MalformedDocument);
  CHECK(first_error(R"({"id":"t","concepts":[{"id":"A"}]})") == ErrorCode::MalformedDocument);
  CHECK(first_error(R"({"id":"bad id","concepts":[{"id":"A"},{"id":"B"}]})") == ErrorCode::MalformedDocument);
  CHECK(first_error(R"({"id":"t","concepts":[{"id":"A"},{"id":"B/C"}]})") == ErrorCode::MalformedDocument);
  CHECK(first_error(R"({"id":"t","grade_scale_max":0,"concepts":[{"id":"A"},{"id":"B"}]})") ==
        ErrorCode::MalformedDocument);
  CHECK(first_error(R"({"id":"t","concepts":[{"id":"A"},{"id":"B"}],"links":{}})") == ErrorCode::MalformedDocument);
}

TEST_CASE("check_course reports every finding") {
  const auto checked = check_course(
      doc_with_links(R"({"source":"A","target":"A"},{"source":"A","target":"Q"},{"source":"A","target":"B"},)"
                     R"({"source":"B","target":"C"},{"source":"C","target":"A"})"));
  CHECK_FALSE(checked.ok());
  CHECK_FALSE(checked.value);
  REQUIRE(checked.issues.size() == 3);
  CHECK(checked.issues[0].code == ErrorCode::SelfLoop);
  CHECK(checked.issues[1].code == ErrorCode::UnknownLinkEndpoint);
  CHECK(checked.issues[2].code == ErrorCode::InitialModelCyclic);
  CHECK(checked.issues[2].message.find("A -> B -> C -> A") != std::string::npos);
}

TEST_CASE("course JSON round-trips byte-identically") {
  const Course course = parse_course(read_fixture("java-101.course.json"));
  const std::string once = write_course_json(course);
  CHECK(parse_course(once) == course);
  CHECK(write_course_json(parse_course(once)) == once);
}
