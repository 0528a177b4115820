#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wcurv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

/// Number of worker threads. Defaults to WCURV_THREADS or 1.
inline int& thread_count() {
  static int n = [] {
    if (const char* env = std::getenv("WCURV_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 1;
  }();
  return n;
}

inline void set_thread_count(int n) { thread_count() = n > 0 ? n : 1; }

/// Static-chunked parallel loop. The chunks partition [0, count) in index
/// order, so any per-index output is identical for every thread count.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  const int threads = thread_count();
  if (threads <= 1 || count < 64) {
    body(0, count);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, t * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

/// Deterministic pairwise summation; independent of thread count because it
/// is always evaluated serially over the array in index order.
inline double pairwise_sum(const double* a, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& a) {
  return pairwise_sum(a.data(), a.size());
}

inline int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace wcurv
