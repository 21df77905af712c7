#include "prereq/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "prereq/course.hpp"
#include "prereq/error.hpp"

namespace prereq {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kTempMarker = ".tmp-";

std::atomic<unsigned long> temp_counter{0};

[[noreturn]] void io_failure(const std::string& what, const fs::path& path) {
  throw Error(ErrorCode::Internal, what + " '" + path.string() + "': " + std::strerror(errno));
}

void write_all(int fd, std::string_view data, const fs::path& path) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      io_failure("cannot write", path);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

std::string_view file_name(Artifact artifact) noexcept {
  switch (artifact) {
    case Artifact::Course: return "course.json";
    case Artifact::Grades: return "grades.csv";
    case Artifact::Model: return "model.json";
  }
  return "course.json";
}

CourseStore::CourseStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_);
  remove_stale_temporaries();
}

void CourseStore::remove_stale_temporaries() {
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (entry.is_regular_file() && entry.path().filename().string().find(kTempMarker) != std::string::npos) {
      std::error_code ec;
      fs::remove(entry.path(), ec);
    }
  }
}

fs::path CourseStore::path_of(std::string_view id, Artifact artifact) const {
  if (!is_valid_identifier(id)) {
    throw Error(ErrorCode::NotFound, "invalid course id '" + std::string(id) + "'");
  }
  return root_ / std::string(id) / std::string(file_name(artifact));
}

std::vector<std::string> CourseStore::list_ids() const {
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(root_)) {
    if (entry.is_directory() && fs::exists(entry.path() / std::string(file_name(Artifact::Course)))) {
      ids.push_back(entry.path().filename().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool CourseStore::has_course(std::string_view id) const {
  return is_valid_identifier(id) && fs::exists(path_of(id, Artifact::Course));
}

std::optional<std::string> CourseStore::read(std::string_view id, Artifact artifact) const {
  const fs::path path = path_of(id, artifact);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void CourseStore::write(std::string_view id, Artifact artifact, std::string_view content) {
  const fs::path target = path_of(id, artifact);
  fs::create_directories(target.parent_path());
  const fs::path temp =
      target.parent_path() / ("." + target.filename().string() + std::string(kTempMarker) +
                              std::to_string(::getpid()) + "-" + std::to_string(temp_counter++));

  const int fd = ::open(temp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) io_failure("cannot create", temp);
  try {
    const std::size_t half = content.size() / 2;
    write_all(fd, content.substr(0, half), temp);
    if (fault_hook_) fault_hook_(temp);
    write_all(fd, content.substr(half), temp);
    if (::fsync(fd) != 0) io_failure("cannot sync", temp);
  } catch (...) {
    ::close(fd);
    throw;
  }
  if (::close(fd) != 0) io_failure("cannot close", temp);
  if (::rename(temp.c_str(), target.c_str()) != 0) io_failure("cannot rename into", target);

  const int dir = ::open(target.parent_path().c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (dir >= 0) {
    ::fsync(dir);
    ::close(dir);
  }
}

std::mutex& CourseStore::writer_lock(std::string_view id) {
  std::lock_guard guard(locks_guard_);
  auto it = locks_.find(id);
  if (it == locks_.end()) it = locks_.emplace(std::string(id), std::make_unique<std::mutex>()).first;
  return *it->second;
}

}  // namespace prereq
