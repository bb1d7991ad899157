#ifndef SYLV_PARALLEL_HPP
#define SYLV_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sylv::detail {

  // Runs body(i) for i in [0, count) on up to `jobs` threads. Each index
  // runs exactly once; if several bodies throw, the exception from the
  // smallest index is rethrown, so failures do not depend on scheduling.
  template <typename Body>
  void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    if (jobs <= 1 || count < 2) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex               mtx;
    std::size_t              failed_at = count;
    std::exception_ptr       failure;

    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mtx);
          if (i < failed_at) {
            failed_at = i;
            failure   = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    unsigned const n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace sylv::detail

#endif  // SYLV_PARALLEL_HPP
