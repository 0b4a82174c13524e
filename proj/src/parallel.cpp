#include "conway/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace conway {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CONWAY_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(threads > 0 ? threads : 1);
  if (workers > n) workers = n;
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

std::optional<std::size_t> parallel_first_hit(std::size_t n, int threads,
                                              const std::function<bool(std::size_t)>& probe) {
  if (n == 0) return std::nullopt;
  std::size_t workers = static_cast<std::size_t>(threads > 0 ? threads : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (probe(i)) return i;
    return std::nullopt;
  }
  // Each worker records the first hit in its contiguous chunk; the global
  // minimum over chunk hits is the global first hit, so the answer does not
  // depend on the chunk boundaries.
  std::atomic<std::size_t> best{n};
  parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (probe(i)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  });
  std::size_t found = best.load();
  if (found == n) return std::nullopt;
  return found;
}

}  // namespace conway
