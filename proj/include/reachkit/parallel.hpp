#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reachkit {

// Upper bound on worker threads used by library kernels. Defaults to the
// hardware concurrency; 1 forces serial execution.
int max_threads() noexcept;
void set_max_threads(int threads) noexcept;

// Calls body(i) for every i in [0, count). Work is split into contiguous
// blocks; callers write results into per-index slots so the output does not
// depend on the thread count. The first exception thrown by any worker is
// rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, max_threads())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Pairwise (cascade) summation in index order; the result depends only on the
// input sequence.
double pairwise_sum(const std::vector<double>& values, std::size_t begin, std::size_t end);
inline double pairwise_sum(const std::vector<double>& values) {
  return pairwise_sum(values, 0, values.size());
}

}  // namespace reachkit
