#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace schurid {

/// Runs body(w) for w in [0, workers) on separate threads and rethrows the
/// first exception in worker order. workers <= 1 runs inline.
template <class F>
void run_workers(unsigned workers, F&& body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Contiguous share [begin, end) of `count` items for worker w.
inline std::pair<std::size_t, std::size_t> worker_range(std::size_t count, unsigned workers,
                                                        unsigned w) {
  const std::size_t base = count / workers, extra = count % workers;
  const std::size_t begin = w * base + (w < extra ? w : extra);
  return {begin, begin + base + (w < extra ? 1 : 0)};
}

}  // namespace schurid
