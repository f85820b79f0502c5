#pragma once
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace curvkit {

// Static block partition of [0,n) across `workers` threads.  Each index writes
// only its own output slot, so results are identical at any worker count.
inline void parallel_for(size_t n, int workers, const std::function<void(size_t)>& body) {
  if (workers <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  size_t w = static_cast<size_t>(workers);
  if (w > n) w = n;
  std::vector<std::thread> threads;
  threads.reserve(w);
  size_t chunk = (n + w - 1) / w;
  for (size_t t = 0; t < w; ++t) {
    size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &body] {
      for (size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : threads) th.join();
}

inline int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace curvkit
