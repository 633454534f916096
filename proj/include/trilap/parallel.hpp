#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace trilap {

/// Maximum number of worker threads. Reads TRILAP_THREADS from the
/// environment (values < 1 are ignored); falls back to the hardware
/// concurrency.
inline unsigned thread_limit() {
  if (const char* s = std::getenv("TRILAP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1u;
}

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one
/// per thread, so results written to per-index slots are identical for any
/// thread count. Exceptions from workers are rethrown on the calling thread.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
  if (n <= 0) return;
  const std::ptrdiff_t nt =
      std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(thread_limit()), n);
  if (nt <= 1) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::ptrdiff_t chunk = (n + nt - 1) / nt;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(nt));
  for (std::ptrdiff_t t = 0; t < nt; ++t) {
    const std::ptrdiff_t lo = t * chunk;
    const std::ptrdiff_t hi = std::min(n, lo + chunk);
    workers.emplace_back([&, lo, hi] {
      try {
        for (std::ptrdiff_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace trilap
