#ifndef BERGELAB_PARALLEL_HPP
#define BERGELAB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bergelab {

// Run fn(i) for i in [0, count) on up to `threads` workers. Each index is
// claimed exactly once; fn must write only to per-index state (slot i), so
// aggregating slots in index order afterwards gives a result independent of
// the thread count.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bergelab

#endif
