#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace alde {

/// Outcome of one identity check.
struct CheckRecord {
  std::string id;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string residual = "0";  ///< serialized residual, "0" when it vanishes
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  bool pass() const;
  std::size_t failures() const;
  void append(const Report& other);
  /// Sorts records by id, then by parameters.
  void sort();
};

using CheckTask = std::function<CheckRecord()>;

/// Number of workers: ALDE_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls fn(0..n-1) on the pool; the first alde::Error is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Runs the tasks on a small pool and times each one. An alde::Error thrown
/// by a task becomes a failed record whose residual holds the message.
/// Records come back in task order.
std::vector<CheckRecord> run_checks(const std::vector<CheckTask>& tasks, const std::vector<std::string>& ids);

using Params = std::map<std::string, std::string>;

/// Checks collected for one run_checks call.
struct TaskList {
  std::vector<CheckTask> tasks;
  std::vector<std::string> ids;

  void add(std::string id, CheckTask t) {
    ids.push_back(std::move(id));
    tasks.push_back(std::move(t));
  }
  Report run(std::string suite) const {
    Report r;
    r.suite = std::move(suite);
    r.records = run_checks(tasks, ids);
    return r;
  }
};

}  // namespace alde
