#include "harper/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace harper {

namespace {
std::atomic<std::size_t> g_workers{0};

std::size_t default_workers() {
  if (const char* env = std::getenv("HARPER_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}
}  // namespace

std::size_t worker_count() {
  const std::size_t n = g_workers.load(std::memory_order_relaxed);
  return n > 0 ? n : default_workers();
}

void set_worker_count(std::size_t n) { g_workers.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 8));
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= n) return;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace harper
