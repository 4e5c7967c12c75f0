#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cliqueidx {

/// Worker count to use when the caller passes 0.
inline std::size_t default_jobs() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(i) for every i in [0, count) on up to `jobs` threads (0 means
/// default_jobs()). Indices are handed out dynamically, so fn must write
/// only to per-index state; callers merge in index order afterwards. The
/// first exception thrown by any worker is rethrown here.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  if (jobs == 0) {
    jobs = default_jobs();
  }
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next.store(count);
          }
        }
      });
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace cliqueidx
