#include <httplib.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "prereq/service.hpp"
#include "prereq/store.hpp"

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : std::move(fallback);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for course models", "prereq-server"};
  std::string addr = env_or("PREREQ_ADDR", "127.0.0.1:8080");
  std::string data_dir = env_or("PREREQ_DATA_DIR", "prereq-data");
  app.add_option("--addr", addr, "Listen address host:port (env PREREQ_ADDR)")->capture_default_str();
  app.add_option("--data-dir", data_dir, "Course store directory (env PREREQ_DATA_DIR)")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "error: --addr must look like host:port\n";
    return 3;
  }
  const std::string host = addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(addr.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "error: invalid port in '" << addr << "'\n";
    return 3;
  }

  prereq::CourseStore store(data_dir);
  prereq::ModelService service(store);
  httplib::Server server;
  service.mount(server);
  std::cerr << "prereq-server listening on " << host << ":" << port << " (data: " << data_dir << ")\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << addr << "\n";
    return 4;
  }
  return 0;
}
