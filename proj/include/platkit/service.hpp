#pragma once

// HTTP/JSON front end. Computation is pure; the only shared state is the job
// table for asynchronous searches and explorations.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "platkit/json.hpp"

namespace platkit {

/// Background jobs keyed by id "job-<n>". State is "running" until the work
/// finishes, then whatever `state_of` reports for the result, or "failed".
class JobTable {
 public:
  explicit JobTable(std::optional<std::filesystem::path> state_dir = std::nullopt);
  ~JobTable();
  JobTable(const JobTable&) = delete;
  JobTable& operator=(const JobTable&) = delete;

  std::string submit(std::string kind, std::function<Json()> work, std::function<std::string(const Json&)> state_of);
  std::optional<Json> get(const std::string& id) const;
  /// Blocks until every submitted job has finished.
  void wait_all();

 private:
  struct Job {
    std::string kind;
    std::string state = "running";
    Json result;
    Json error;
  };
  Json describe(const std::string& id, const Job& job) const;

  std::optional<std::filesystem::path> state_dir_;
  mutable std::mutex mu_;
  std::map<std::string, Job> jobs_;
  std::vector<std::thread> workers_;
  int next_id_ = 1;
};

struct ServiceOptions {
  std::optional<std::filesystem::path> state_dir;
};

class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  /// Binds and serves until stop(); returns false if the port is taken.
  bool listen(const std::string& host, int port);
  /// Binds an ephemeral port and returns it (or -1); serve with listen_after_bind().
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  JobTable& jobs();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace platkit
