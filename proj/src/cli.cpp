#include "prereq/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prereq/course.hpp"
#include "prereq/grades.hpp"
#include "prereq/miner.hpp"
#include "prereq/model_io.hpp"

namespace prereq::cli {

namespace {

/// Raised for unreadable input files.
struct InputNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an output document cannot be written.
struct OutputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputNotFound("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_document(const std::string& path, const std::string& document, std::ostream& out) {
  if (path == "-") {
    out << document;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << document) || !file.flush()) throw OutputFailure("cannot write '" + path + "'");
}

std::string summary_line(const FinalDomainModel& model) {
  std::ostringstream os;
  os << "kept=" << model.count(Verdict::Kept) << " reversed=" << model.count(Verdict::Reversed)
     << " dropped=" << model.count(Verdict::Dropped)
     << " insufficient_data=" << model.count(Verdict::InsufficientData)
     << " final_links=" << model.final_links.size();
  return os.str();
}

struct ModelOptions {
  std::string course_path;
  std::string grades_path;
  double s1 = -5.0;
  double s2 = 5.0;
  double s3 = 10.0;
  std::string format = "json";
  bool show_dropped = false;
};

void add_model_options(CLI::App& cmd, ModelOptions& o) {
  cmd.add_option("--course", o.course_path, "Course document (JSON)")->required();
  cmd.add_option("--grades", o.grades_path, "Learner grades (CSV)")->required();
  cmd.add_option("--s1", o.s1, "Lower CPR breakpoint, negative grade points")->capture_default_str();
  cmd.add_option("--s2", o.s2, "CPR upper breakpoint and RPR apex, positive grade points")->capture_default_str();
  cmd.add_option("--s3", o.s3, "Upper RPR breakpoint, greater than s2")->capture_default_str();
  cmd.add_option("--format", o.format, "Output document format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  cmd.add_flag("--show-dropped", o.show_dropped, "Draw dropped links as dashed edges in DOT output");
}

struct Inputs {
  Course course;
  GradeMatrix matrix;
  FuzzyThresholds thresholds;
};

Inputs load_inputs(const ModelOptions& o) {
  const std::string course_text = read_file(o.course_path);
  const std::string grades_text = read_file(o.grades_path);
  Course course = parse_course(course_text);
  GradeMatrix matrix = parse_grades_csv(grades_text, course);
  return {std::move(course), std::move(matrix), FuzzyThresholds::validate(o.s1, o.s2, o.s3)};
}

std::string render(const FinalDomainModel& model, const Inputs& in, const ModelOptions& o) {
  if (o.format == "dot") return export_dot(model, in.course, DotOptions{o.show_dropped});
  return export_model_json(model);
}

std::vector<AlphaCut> parse_alphas(const std::string& list) {
  std::vector<AlphaCut> alphas;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::MalformedDocument, "alpha '" + item + "' is not a number");
    alphas.push_back(AlphaCut::validate(value));
  }
  if (alphas.empty()) throw Error(ErrorCode::EmptyAlphaList, "--alphas needs at least one value");
  return alphas;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refine prerequisite concept graphs from learner grades", "prereq"};
  app.require_subcommand(1);

  ModelOptions refine_opts;
  double alpha = 0.5;
  std::string out_path = "-";
  auto* refine = app.add_subcommand("refine", "Refine a course model at one alpha-cut");
  add_model_options(*refine, refine_opts);
  refine->add_option("--alpha", alpha, "Alpha-cut in [0, 1]")->capture_default_str();
  refine->add_option("--out", out_path, "Output path, '-' for standard output")->capture_default_str();

  ModelOptions sweep_opts;
  std::string alpha_list;
  std::string out_dir;
  auto* sweep = app.add_subcommand("sweep", "Refine at several alpha-cuts and tabulate verdict counts");
  add_model_options(*sweep, sweep_opts);
  sweep->add_option("--alphas", alpha_list, "Comma-separated ascending alpha-cuts, e.g. 0.2,0.5")->required();
  sweep->add_option("--out-dir", out_dir, "Directory for per-alpha model documents (model_alpha_<a>.<format>)");

  std::string validate_course;
  std::string validate_grades;
  auto* validate = app.add_subcommand("validate", "Check course and grade files, reporting every violation");
  validate->add_option("--course", validate_course, "Course document (JSON)")->required();
  validate->add_option("--grades", validate_grades, "Learner grades (CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kValidation;
  }

  try {
    if (*refine) {
      const Inputs in = load_inputs(refine_opts);
      const auto model = refine_model(in.course, in.matrix, in.thresholds, AlphaCut::validate(alpha));
      write_document(out_path, render(model, in, refine_opts), out);
      (out_path == "-" ? err : out) << summary_line(model) << "\n";
      return kOk;
    }

    if (*sweep) {
      const Inputs in = load_inputs(sweep_opts);
      const auto alphas = parse_alphas(alpha_list);
      const auto models = sweep_alpha(in.course, in.matrix, in.thresholds, alphas);
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      out << "alpha,kept,reversed,dropped,insufficient_data,final_links\n";
      for (const auto& model : models) {
        const std::string a = format_number(model.cut.alpha());
        out << a << ',' << model.count(Verdict::Kept) << ',' << model.count(Verdict::Reversed) << ','
            << model.count(Verdict::Dropped) << ',' << model.count(Verdict::InsufficientData) << ','
            << model.final_links.size() << "\n";
        if (!out_dir.empty()) {
          const auto path = std::filesystem::path(out_dir) / ("model_alpha_" + a + "." + sweep_opts.format);
          write_document(path.string(), render(model, in, sweep_opts), out);
        }
      }
      return kOk;
    }

    // validate
    const Checked<Course> course = check_course(read_file(validate_course));
    std::string grades_text;
    if (!validate_grades.empty()) grades_text = read_file(validate_grades);
    std::vector<Issue> issues = course.issues;
    std::optional<GradeMatrix> matrix;
    if (course.ok() && !validate_grades.empty()) {
      auto grades = check_grades_csv(grades_text, *course.value);
      issues.insert(issues.end(), grades.issues.begin(), grades.issues.end());
      matrix = std::move(grades.value);
    }
    for (const auto& issue : issues) err << "error[" << to_string(issue.code) << "]: " << issue.message << "\n";
    if (!course.ok()) {
      if (!validate_grades.empty()) err << "note: grades not checked because the course is invalid\n";
      return kValidation;
    }
    out << "course " << course.value->id << ": " << course.value->concepts.size() << " concepts, "
        << course.value->initial_links.size() << " links\n";
    if (matrix) {
      out << "grades: " << matrix->learner_count() << " learners, " << matrix->absent_count()
          << " absent cells\n";
    }
    return issues.empty() ? kOk : kValidation;
  } catch (const InputNotFound& e) {
    err << "error: " << e.what() << "\n";
    return kInputNotFound;
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidation : kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace prereq::cli
