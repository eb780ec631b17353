#ifndef SEMIWORK_SRC_PARALLEL_HPP_
#define SEMIWORK_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semiwork::detail {

  // Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
  // handed out in increasing index order. The first exception thrown by a
  // task is rethrown on the calling thread after all workers joined.
  template <typename Task>
  void parallel_for(std::size_t count, unsigned workers, Task&& task) {
    std::size_t const threads
        = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        task(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mtx;
    auto                     body = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mtx);
          if (!failure) {
            failure = std::current_exception();
          }
          next = count;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(body);
    }
    body();
    for (auto& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace semiwork::detail

#endif  // SEMIWORK_SRC_PARALLEL_HPP_
