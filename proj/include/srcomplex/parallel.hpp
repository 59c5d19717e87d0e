#ifndef SRCOMPLEX_PARALLEL_HPP
#define SRCOMPLEX_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace srcomplex {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
/// results into per-index slots, so the outcome does not depend on the
/// schedule. threads <= 1 runs inline, in index order. The first exception
/// thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t n = std::min(threads, count);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_PARALLEL_HPP
