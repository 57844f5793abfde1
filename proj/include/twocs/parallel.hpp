#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace twocs {

// Worker count from TWOCS_THREADS (default: hardware concurrency, at least 1).
inline int thread_count() {
  if (const char* env = std::getenv("TWOCS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
// write only to per-index slots so results are independent of scheduling.
template <class F>
void parallel_for(int n, F&& body) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
}

}  // namespace twocs
