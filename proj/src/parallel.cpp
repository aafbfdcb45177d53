#include "reachkit/parallel.hpp"

#include <atomic>

namespace reachkit {
namespace {

int default_threads() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{default_threads()};
  return cap;
}

}  // namespace

int max_threads() noexcept { return thread_cap().load(std::memory_order_relaxed); }

void set_max_threads(int threads) noexcept {
  thread_cap().store(threads <= 0 ? default_threads() : threads, std::memory_order_relaxed);
}

double pairwise_sum(const std::vector<double>& values, std::size_t begin, std::size_t end) {
  const std::size_t n = end - begin;
  if (n <= 8) {
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += values[i];
    return sum;
  }
  const std::size_t mid = begin + n / 2;
  return pairwise_sum(values, begin, mid) + pairwise_sum(values, mid, end);
}

}  // namespace reachkit
