#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prereq {

enum class Artifact { Course, Grades, Model };

/// File name of an artifact inside a course directory.
std::string_view file_name(Artifact artifact) noexcept;

/// File-backed course repository: <root>/<course id>/{course.json,
/// grades.csv,model.json}. Every write goes to a temporary file in the same
/// directory which is fsynced and then renamed over the target, so readers
/// only ever observe complete documents. Leftover temporaries from an
/// interrupted write are removed when a store is opened.
class CourseStore {
 public:
  explicit CourseStore(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }

  /// Course ids with a stored course document, sorted.
  std::vector<std::string> list_ids() const;
  bool has_course(std::string_view id) const;

  std::optional<std::string> read(std::string_view id, Artifact artifact) const;
  void write(std::string_view id, Artifact artifact, std::string_view content);

  /// Mutex serializing writers of one course. Readers never need it.
  std::mutex& writer_lock(std::string_view id);

  /// Test hook, called with the temporary path after half of the content is
  /// written and before the rename. An exception thrown from the hook
  /// simulates a crash: the temporary is left behind and the target is not
  /// touched.
  using FaultHook = std::function<void(const std::filesystem::path& temp)>;
  void set_fault_hook(FaultHook hook) { fault_hook_ = std::move(hook); }

 private:
  std::filesystem::path path_of(std::string_view id, Artifact artifact) const;
  void remove_stale_temporaries();

  std::filesystem::path root_;
  FaultHook fault_hook_;
  std::mutex locks_guard_;
  std::map<std::string, std::unique_ptr<std::mutex>, std::less<>> locks_;
};

}  // namespace prereq
