#include "alde/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "alde/error.hpp"

namespace alde {

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

void Report::append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

void Report::sort() {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params < b.params;
  });
}

unsigned worker_count() {
  if (const char* env = std::getenv("ALDE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (const Error&) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
      }
    }
  };
  const unsigned w = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (w <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first) std::rethrow_exception(first);
}

std::vector<CheckRecord> run_checks(const std::vector<CheckTask>& tasks, const std::vector<std::string>& ids) {
  std::vector<CheckRecord> out(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    try {
      out[i] = tasks[i]();
    } catch (const Error& e) {
      out[i] = CheckRecord{};
      out[i].id = i < ids.size() ? ids[i] : std::string("check");
      out[i].pass = false;
      out[i].residual = std::string("error: ") + e.what();
    }
    out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return out;
}

}  // namespace alde
