#ifndef IBNCUT_PARALLEL_HPP
#define IBNCUT_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ibncut {

inline std::atomic<int>& thread_count_slot() {
  static std::atomic<int> n{0};
  return n;
}

inline void set_thread_count(int n) { thread_count_slot().store(n); }

inline int thread_count() {
  int n = thread_count_slot().load();
  if (n > 0) return n;
  if (const char* env = std::getenv("IBNCUT_THREADS")) {
    int e = std::atoi(env);
    if (e > 0) return e;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(stripe) for every stripe in [0, nstripes); stripes are claimed
// dynamically, so f must only touch per-stripe state. Callers merge stripe
// results in stripe order to stay deterministic.
template <class F>
void parallel_stripes(int nstripes, F&& f) {
  int workers = std::min(thread_count(), nstripes);
  if (workers <= 1) {
    for (int s = 0; s < nstripes; ++s) f(s);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int s = next.fetch_add(1);
        if (s >= nstripes) return;
        f(s);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ibncut

#endif
