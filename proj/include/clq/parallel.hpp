#ifndef CLQ_PARALLEL_HPP
#define CLQ_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace clq {

// Static block partition of [0, n); fn(begin, end) runs per worker.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || n < 1024) {
    fn((std::size_t)0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t b = t * chunk;
    if (b >= n) break;
    std::size_t e = std::min(n, b + chunk);
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace clq

#endif
