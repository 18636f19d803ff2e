#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace frobcov {

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
/// Work is handed out in small chunks; callers write results into slot i so
/// output order never depends on scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t chunk = 64) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, (n + chunk - 1) / std::max<std::size_t>(chunk, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      while (true) {
        const std::size_t start = next.fetch_add(chunk);
        if (start >= n) return;
        const std::size_t stop = std::min(n, start + chunk);
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace frobcov
