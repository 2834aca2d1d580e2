#pragma once

// Tiny fan-out helper: runs independent jobs on a fixed number of worker
// threads. Jobs share only immutable inputs; per-thread caches inside the
// rewriting engine are thread_local, and worker threads inherit the ambient
// floating point precision.

#include <functional>
#include <thread>
#include <vector>

#include "qcp2/bigfloat.hpp"

namespace qcp2 {

inline unsigned& parallelism() {
  static unsigned degree = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  return degree;
}

inline void parallel_for(size_t n, const std::function<void(size_t)>& job) {
  unsigned workers = std::min<size_t>(parallelism(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) job(i);
    return;
  }
  unsigned digits = BigFloat::default_precision();
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      BigFloat::default_precision(digits);
      try {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= n) break;
          job(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace qcp2
